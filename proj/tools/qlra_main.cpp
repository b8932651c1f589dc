#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qlra/json_io.hpp"
#include "qlra/version.hpp"

namespace {

using qlra::Json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNotTrigonometric = 3;
constexpr int kExitTheoremViolation = 4;

int exit_code_for(qlra::ErrorCode code) {
  switch (code) {
    case qlra::ErrorCode::NotTrigonometric: return kExitNotTrigonometric;
    case qlra::ErrorCode::TheoremViolation: return kExitTheoremViolation;
    default: return kExitValidation;
  }
}

std::string read_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Json load_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text = read_stream(std::cin);
  } else {
    std::ifstream file(path);
    if (!file) {
      throw qlra::Error(qlra::ErrorCode::MalformedInput,
                        "cannot open input file " + path);
    }
    text = read_stream(file);
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw qlra::Error(qlra::ErrorCode::MalformedInput, e.what());
  }
}

void emit(const Json& report, const std::string& output, bool pretty) {
  const std::string text = qlra::write_json(report, pretty) + "\n";
  if (output == "-") {
    std::cout << text;
  } else {
    std::ofstream file(output);
    if (!file) {
      std::cerr << "cannot open output file " << output << "\n";
      std::exit(kExitValidation);
    }
    file << text;
  }
}

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::uint64_t seed = 1;
  int trials = 1000;
  std::optional<double> tol;
  bool pretty = false;
};

int run_classify(const Options& opts) {
  const Json doc = load_input(opts.input);
  const qlra::JobInput in = qlra::parse_job_input(doc);
  const auto profile = qlra::interference_coefficients(in.context, in.p_ba);

  Json payload{{"b_given_a", qlra::to_json(profile)},
               {"p_ab_defaulted", in.p_ab_defaulted}};
  if (!in.p_ab_defaulted) {
    payload["a_given_b"] =
        qlra::to_json(qlra::interference_coefficients(in.context, in.p_ab));
  }
  const Json summary{
      {"lambda_antisymmetry", std::abs(profile.lambda[0] + profile.lambda[1])}};
  emit(qlra::make_report("classify", doc, payload, summary, kExitOk),
       opts.output, opts.pretty);
  return kExitOk;
}

int run_represent(const Options& opts) {
  const Json doc = load_input(opts.input);
  const qlra::JobInput in = qlra::parse_job_input(doc);

  const auto s_ba = qlra::build_state(in.context, in.p_ba, qlra::Orientation::BGivenA);
  const auto s_ab = qlra::build_state(in.context, in.p_ab, qlra::Orientation::AGivenB);
  const auto r_ba = qlra::born_residuals(s_ba);
  const auto r_ab = qlra::born_residuals(s_ab);

  Json payload{{"b_given_a", qlra::to_json(s_ba)},
               {"b_given_a_born", qlra::to_json(r_ba)},
               {"a_given_b", qlra::to_json(s_ab)},
               {"a_given_b_born", qlra::to_json(r_ab)},
               {"p_ab_defaulted", in.p_ab_defaulted}};
  const Json summary{{"max_born_residual", std::max(r_ba.max(), r_ab.max())}};
  emit(qlra::make_report("represent", doc, payload, summary, kExitOk),
       opts.output, opts.pretty);
  return kExitOk;
}

int run_equiv(const Options& opts) {
  const Json doc = load_input(opts.input);
  const qlra::JobInput in = qlra::parse_job_input(doc);

  auto payload_for = [&](const qlra::EquivalenceReport& report) {
    Json payload = qlra::to_json(report);
    payload["p_ba_parameter"] = in.p_ba.parameter();
    payload["p_ab_parameter"] = in.p_ab.parameter();
    payload["p_ab_defaulted"] = in.p_ab_defaulted;
    return payload;
  };

  try {
    const auto report = qlra::theorem_check(in.context, in.p_ba, in.p_ab);
    double max_identity = 0.0;
    for (const auto& [name, value] : report.identity_residuals) {
      max_identity = std::max(max_identity, value);
    }
    const Json summary{{"overlap_deficit", 1.0 - report.overlap},
                       {"max_identity_residual", max_identity}};
    emit(qlra::make_report("equiv", doc, payload_for(report), summary, kExitOk),
         opts.output, opts.pretty);
    return kExitOk;
  } catch (const qlra::TheoremViolation& v) {
    Json report = qlra::error_report("equiv", doc, to_string(v.code()), v.what(),
                                     kExitTheoremViolation);
    report["payload"] = payload_for(v.report());
    emit(report, opts.output, opts.pretty);
    return kExitTheoremViolation;
  }
}

int run_generate(const Options& opts, bool have_input) {
  Json doc = Json::object();
  qlra::GenConstraints cons{};
  if (have_input) {
    doc = load_input(opts.input);
    cons = qlra::parse_constraints(doc);
  }
  const auto inst = qlra::generate(opts.seed, cons);
  const auto profile = qlra::interference_coefficients(inst.context, inst.p_ba);
  const Json summary{
      {"theta_recovery_error", std::abs(profile.theta[0] - inst.theta_truth)}};
  emit(qlra::make_report("generate", doc, qlra::to_json(inst), summary, kExitOk),
       opts.output, opts.pretty);
  return kExitOk;
}

int run_simulate(const Options& opts) {
  const Json doc = load_input(opts.input);
  const auto inst = qlra::parse_instance(doc);
  const auto run = qlra::empirical_pipeline(
      inst, static_cast<std::uint64_t>(opts.trials), opts.seed);
  Json summary = Json::object();
  if (run.profile.trigonometric()) {
    summary["max_born_residual"] = run.max_born_residual;
  }
  emit(qlra::make_report("simulate", doc, qlra::to_json(run), summary, kExitOk),
       opts.output, opts.pretty);
  return kExitOk;
}

int run_verify(const Options& opts) {
  qlra::VerifyOptions vopts;
  vopts.seed = opts.seed;
  vopts.trials = opts.trials;
  if (opts.tol) vopts.tol = *opts.tol;
  const auto result = qlra::run_verification(vopts);
  const int status = result.passed() ? kExitOk : kExitTheoremViolation;
  const Json summary{{"failures", result.failures}};
  emit(qlra::make_report("verify", Json::object(), qlra::to_json(result),
                         summary, status),
       opts.output, opts.pretty);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reconstruction of complex amplitudes from two-observable "
               "probabilistic data, with unitary-equivalence checks"};
  app.set_version_flag("--version", qlra::kVersion);
  app.require_subcommand(1);

  Options opts;
  std::string command;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("--input", opts.input, "input JSON path, or - for stdin");
    }
    sub->add_option("--output", opts.output, "output path, or - for stdout");
    sub->add_flag("--pretty", opts.pretty, "indent the report JSON");
  };

  auto* classify = app.add_subcommand(
      "classify", "interference coefficients and trigonometric/hyperbolic class");
  add_common(classify, true);

  auto* represent = app.add_subcommand(
      "represent", "amplitudes for both conditioning orders with Born residuals");
  add_common(represent, true);

  auto* equiv = app.add_subcommand(
      "equiv", "unitary equivalence of the two representations");
  add_common(equiv, true);
  equiv->add_option("--tol", opts.tol, "overlap tolerance override")
      ->check(CLI::PositiveNumber);

  auto* generate = app.add_subcommand("generate", "random trigonometric instance");
  add_common(generate, true);
  generate->add_option("--seed", opts.seed, "generator seed");

  auto* simulate = app.add_subcommand(
      "simulate", "finite-sample counts and the count-estimated pipeline");
  add_common(simulate, true);
  simulate->add_option("--seed", opts.seed, "sampling seed");
  simulate->add_option("--trials", opts.trials, "number of samples N")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand(
      "verify", "property sweep: construction invariants, equivalence "
                "branches, identity chain");
  add_common(verify, false);
  verify->add_option("--seed", opts.seed, "sweep seed");
  verify->add_option("--trials", opts.trials, "trials per sweep")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", opts.tol, "residual tolerance override")
      ->check(CLI::PositiveNumber);

  // generate reads constraints from --input only when one was given
  bool generate_has_input = false;
  generate->callback([&] { generate_has_input = generate->count("--input") > 0; });

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(classify)) command = "classify";
  else if (app.got_subcommand(represent)) command = "represent";
  else if (app.got_subcommand(equiv)) command = "equiv";
  else if (app.got_subcommand(generate)) command = "generate";
  else if (app.got_subcommand(simulate)) command = "simulate";
  else command = "verify";

  try {
    if (command == "classify") return run_classify(opts);
    if (command == "represent") return run_represent(opts);
    if (command == "equiv") return run_equiv(opts);
    if (command == "generate") return run_generate(opts, generate_has_input);
    if (command == "simulate") return run_simulate(opts);
    return run_verify(opts);
  } catch (const qlra::Error& e) {
    const int status = exit_code_for(e.code());
    emit(qlra::error_report(command, Json::object(), to_string(e.code()),
                            e.what(), status),
         opts.output, opts.pretty);
    return status;
  } catch (const std::exception& e) {
    emit(qlra::error_report(command, Json::object(), "MALFORMED_INPUT", e.what(),
                            kExitValidation),
         opts.output, opts.pretty);
    return kExitValidation;
  }
}
