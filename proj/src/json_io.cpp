#include "qlra/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "qlra/version.hpp"

namespace qlra {

Json to_json(const Pair& p) { return Json::array({p[0], p[1]}); }

Json to_json(const Complex& z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json to_json(const ComplexPair& v) {
  return Json::array({to_json(v[0]), to_json(v[1])});
}

Json to_json(const TransitionMatrix& m) {
  return Json{{"entries", Json::array({Json::array({m.entries[0][0], m.entries[0][1]}),
                                       Json::array({m.entries[1][0], m.entries[1][1]})})},
              {"orientation", to_string(m.orientation)},
              {"parameter", m.parameter()}};
}

Json to_json(const ContextData& c) {
  return Json{{"pa", to_json(c.pa)}, {"pb", to_json(c.pb)}};
}

Json to_json(const InterferenceProfile& p) {
  Json j{{"lambda", to_json(p.lambda)},
         {"classification", to_string(p.classification)}};
  if (p.trigonometric()) j["theta"] = to_json(p.theta);
  return j;
}

Json to_json(const QLState& s) {
  return Json{{"amplitude", to_json(s.amp)},
              {"rep", to_string(s.rep)},
              {"context", to_json(s.context)},
              {"matrix", to_json(s.matrix)},
              {"profile", to_json(s.profile)}};
}

Json to_json(const Basis& b) {
  return Json{{"v1", to_json(b.v1)}, {"v2", to_json(b.v2)}};
}

Json to_json(const Expansion& e) {
  return Json{{"coefficients", to_json(e.coefficients)},
              {"residual", e.residual},
              {"coefficient_deviation", e.coefficient_deviation}};
}

Json to_json(const BornResiduals& r) {
  return Json{{"target", to_json(r.target)},
              {"conjugate", to_json(r.conjugate)},
              {"max", r.max()}};
}

Json to_json(const UnitaryMap& u) {
  return Json{{"m", Json::array({Json::array({u.m[0][0], u.m[0][1]}),
                                 Json::array({u.m[1][0], u.m[1][1]})})},
              {"unitarity_deviation", unitarity_deviation(u)}};
}

Json to_json(const EquivalenceReport& r) {
  Json j{{"matrices_symmetric", r.matrices_symmetric},
         {"phase_equivalent", r.phase_equivalent},
         {"match_kind", to_string(r.match_kind)},
         {"overlap", r.overlap},
         {"identity_residuals", r.identity_residuals}};
  if (r.matched_phase) j["matched_phase"] = *r.matched_phase;
  return j;
}

Json to_json(const GeneratedInstance& inst) {
  return Json{{"pa", to_json(inst.context.pa)},
              {"pb", to_json(inst.context.pb)},
              {"p_ba", Json::array({Json::array({inst.p_ba.entries[0][0], inst.p_ba.entries[0][1]}),
                                    Json::array({inst.p_ba.entries[1][0], inst.p_ba.entries[1][1]})})},
              {"p_ab", Json::array({Json::array({inst.p_ab.entries[0][0], inst.p_ab.entries[0][1]}),
                                    Json::array({inst.p_ab.entries[1][0], inst.p_ab.entries[1][1]})})},
              {"truth", Json{{"theta_beta1", inst.theta_truth},
                             {"lambda", to_json(inst.lambda_truth)}}},
              {"seed", inst.seed},
              {"rng", kRngAlgorithm}};
}

Json to_json(const CountTable& t) {
  return Json{{"n", t.n},
              {"a_counts", Json::array({t.a_counts[0], t.a_counts[1]})},
              {"b_given_a_counts",
               Json::array({Json::array({t.b_given_a[0][0], t.b_given_a[0][1]}),
                            Json::array({t.b_given_a[1][0], t.b_given_a[1][1]})})},
              {"seed", t.seed},
              {"rng", kRngAlgorithm}};
}

Json to_json(const EmpiricalRun& run) {
  Json j{{"counts", to_json(run.counts)},
         {"estimated_context", to_json(run.estimate.context)},
         {"estimated_matrix", to_json(run.estimate.matrix)},
         {"profile", to_json(run.profile)}};
  if (run.profile.trigonometric()) {
    j["target_residuals"] = to_json(run.target_residuals);
    j["conjugate_residuals"] = to_json(run.conjugate_residuals);
    j["max_born_residual"] = run.max_born_residual;
  }
  return j;
}

Json to_json(const VerifyResult& r) {
  return Json{{"trials", r.trials},
              {"seed", r.seed},
              {"construction",
               Json{{"max_born_residual", r.max_born_residual},
                    {"max_norm_deviation", r.max_norm_deviation},
                    {"max_expansion_residual", r.max_expansion_residual},
                    {"max_coefficient_deviation", r.max_coefficient_deviation},
                    {"max_gram_deviation", r.max_gram_deviation},
                    {"max_unitarity_deviation", r.max_unitarity_deviation},
                    {"max_lambda_antisymmetry", r.max_lambda_antisymmetry},
                    {"max_theta_recovery_error", r.max_theta_recovery_error}}},
              {"symmetric_pairs",
               Json{{"equivalent", r.symmetric_equivalent},
                    {"direct", r.symmetric_direct},
                    {"conjugate", r.symmetric_conjugate},
                    {"min_overlap", r.min_symmetric_overlap}}},
              {"asymmetric_pairs",
               Json{{"nonequivalent", r.asymmetric_nonequivalent},
                    {"max_overlap", r.max_asymmetric_overlap},
                    {"median_overlap", r.median_asymmetric_overlap},
                    {"iff_violations", r.iff_violations}}},
              {"max_identity_residuals", r.max_identity_residuals},
              {"failures", r.failures},
              {"passed", r.passed()}};
}

namespace {

[[noreturn]] void malformed(const std::string& pointer, const std::string& why) {
  throw Error(ErrorCode::MalformedInput, why + " at " + pointer);
}

double number_at(const Json& j, const std::string& pointer) {
  if (!j.is_number()) malformed(pointer, "expected a number");
  return j.get<double>();
}

Pair pair_at(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) malformed("/" + key, "missing required field");
  const Json& j = doc.at(key);
  if (!j.is_array() || j.size() != 2) malformed("/" + key, "expected an array of 2 numbers");
  return {number_at(j[0], "/" + key + "/0"), number_at(j[1], "/" + key + "/1")};
}

Matrix2 matrix_at(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) malformed("/" + key, "missing required field");
  const Json& j = doc.at(key);
  if (!j.is_array() || j.size() != 2) malformed("/" + key, "expected a 2x2 array");
  Matrix2 m{};
  for (int r = 0; r < 2; ++r) {
    const Json& row = j[r];
    const std::string rp = "/" + key + "/" + std::to_string(r);
    if (!row.is_array() || row.size() != 2) malformed(rp, "expected an array of 2 numbers");
    for (int c = 0; c < 2; ++c) {
      m[r][c] = number_at(row[c], rp + "/" + std::to_string(c));
    }
  }
  return m;
}

Matrix2 transpose(const Matrix2& m) {
  return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}};
}

}  // namespace

JobInput parse_job_input(const Json& doc) {
  if (!doc.is_object()) malformed("/", "expected a JSON object");
  JobInput in{};
  in.context = validate_context(pair_at(doc, "pa"), pair_at(doc, "pb"));
  in.p_ba = validate_transition(matrix_at(doc, "p_ba"), Orientation::BGivenA);
  if (doc.contains("p_ab")) {
    in.p_ab = validate_transition(matrix_at(doc, "p_ab"), Orientation::AGivenB);
  } else {
    // transpose-symmetric partner: for doubly stochastic input this is the
    // p' = p default
    in.p_ab = validate_transition(transpose(in.p_ba.entries), Orientation::AGivenB);
    in.p_ab_defaulted = true;
  }
  return in;
}

GenConstraints parse_constraints(const Json& doc) {
  GenConstraints cons{};
  if (doc.is_null()) return cons;
  if (!doc.is_object()) malformed("/", "expected a JSON object");
  if (doc.contains("theta_range")) cons.theta_range = pair_at(doc, "theta_range");
  if (doc.contains("p_range")) cons.p_range = pair_at(doc, "p_range");
  if (doc.contains("pa_range")) cons.pa_range = pair_at(doc, "pa_range");
  if (doc.contains("symmetric")) {
    if (!doc["symmetric"].is_boolean()) malformed("/symmetric", "expected a boolean");
    cons.symmetric = doc["symmetric"].get<bool>();
  }
  if (doc.contains("min_gap")) cons.min_gap = number_at(doc["min_gap"], "/min_gap");
  return cons;
}

GeneratedInstance parse_instance(const Json& doc) {
  if (!doc.is_object()) malformed("/", "expected a JSON object");
  GeneratedInstance inst{};
  inst.context = validate_context(pair_at(doc, "pa"), pair_at(doc, "pb"));
  inst.p_ba = validate_transition(matrix_at(doc, "p_ba"), Orientation::BGivenA);
  inst.p_ab = validate_transition(matrix_at(doc, "p_ab"), Orientation::AGivenB);
  if (!doc.contains("truth") || !doc["truth"].is_object()) {
    malformed("/truth", "missing truth object");
  }
  const Json& truth = doc["truth"];
  if (!truth.contains("theta_beta1")) malformed("/truth/theta_beta1", "missing field");
  inst.theta_truth = number_at(truth["theta_beta1"], "/truth/theta_beta1");
  inst.lambda_truth = pair_at(truth, "lambda");
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      malformed("/seed", "expected an integer");
    }
    inst.seed = doc["seed"].get<std::uint64_t>();
  }
  return inst;
}

namespace {

void write_value(const Json& j, std::string& out, bool pretty, int depth);

void write_indent(std::string& out, bool pretty, int depth) {
  if (!pretty) return;
  out.push_back('\n');
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
}

void write_double(double x, std::string& out) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  out += buf;
}

void write_value(const Json& j, std::string& out, bool pretty, int depth) {
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out.push_back('{');
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out.push_back(',');
        first = false;
        write_indent(out, pretty, depth + 1);
        out += Json(key).dump();
        out += pretty ? ": " : ":";
        write_value(value, out, pretty, depth + 1);
      }
      write_indent(out, pretty, depth);
      out.push_back('}');
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out.push_back('[');
      bool first = true;
      for (const auto& value : j) {
        if (!first) out.push_back(',');
        first = false;
        write_indent(out, pretty, depth + 1);
        write_value(value, out, pretty, depth + 1);
      }
      write_indent(out, pretty, depth);
      out.push_back(']');
      return;
    }
    case Json::value_t::number_float:
      write_double(j.get<double>(), out);
      return;
    default:
      // integers, strings, booleans, null keep nlohmann's exact form
      out += j.dump();
      return;
  }
}

}  // namespace

std::string write_json(const Json& doc, bool pretty) {
  std::string out;
  write_value(doc, out, pretty, 0);
  return out;
}

Json make_report(const std::string& command, const Json& input_echo,
                 const Json& payload, const Json& residual_summary,
                 int exit_status) {
  return Json{{"version", kVersion},
              {"command", command},
              {"input", input_echo},
              {"payload", payload},
              {"residual_summary", residual_summary},
              {"status", exit_status == 0 ? "ok" : "error"},
              {"exit_status", exit_status}};
}

Json error_report(const std::string& command, const Json& input_echo,
                  const std::string& code, const std::string& message,
                  int exit_status) {
  Json j = make_report(command, input_echo, Json::object(), Json::object(),
                       exit_status);
  j["error"] = Json{{"code", code}, {"message", message}};
  return j;
}

}  // namespace qlra
