#include "qlra/json_io.hpp"

#include <cstdint>

#include "test_support.hpp"

using namespace qlra;

TEST_CASE("floats serialize with full precision and round-trip") {
  const Json doc{{"x", 0.7}, {"y", 0.5}, {"z", 1.0 / 3.0}};
  const std::string text = write_json(doc);
  CHECK(text.find("0.69999999999999996") != std::string::npos);
  CHECK(text.find("0.33333333333333331") != std::string::npos);

  const Json back = Json::parse(text);
  CHECK(back["x"].get<double>() == 0.7);
  CHECK(back["z"].get<double>() == 1.0 / 3.0);
}

TEST_CASE("64-bit seeds survive serialization") {
  const std::uint64_t big = 18446744073709551615ULL;
  const Json doc{{"seed", big}};
  const Json back = Json::parse(write_json(doc));
  CHECK(back["seed"].get<std::uint64_t>() == big);
}

TEST_CASE("non-finite numbers become null") {
  const Json doc{{"bad", std::nan("")}};
  CHECK(write_json(doc) == "{\"bad\":null}");
}

TEST_CASE("pretty printing is still parseable") {
  const Json doc{{"a", Json::array({1.5, 2.5})}, {"b", Json{{"c", true}}}};
  const std::string text = write_json(doc, true);
  CHECK(text.find('\n') != std::string::npos);
  CHECK(Json::parse(text) == Json::parse(write_json(doc)));
}

TEST_CASE("complex numbers serialize as re/im objects") {
  const Json j = to_json(Complex(0.25, -0.5));
  CHECK(j["re"].get<double>() == 0.25);
  CHECK(j["im"].get<double>() == -0.5);
}

TEST_CASE("job input parsing, defaulting and pointer diagnostics") {
  const Json doc = Json::parse(R"({
    "pa": [0.6, 0.4],
    "pb": [0.55, 0.45],
    "p_ba": [[0.7, 0.3], [0.3, 0.7]]
  })");
  const JobInput in = parse_job_input(doc);
  CHECK(in.context.pa[0] == 0.6);
  CHECK(in.p_ba.parameter() == 0.7);
  CHECK(in.p_ab_defaulted);
  CHECK(in.p_ab.parameter() == 0.7);
  CHECK(in.p_ab.orientation == Orientation::AGivenB);

  const Json with_ab = Json::parse(R"({
    "pa": [0.6, 0.4],
    "pb": [0.55, 0.45],
    "p_ba": [[0.7, 0.3], [0.3, 0.7]],
    "p_ab": [[0.2, 0.8], [0.8, 0.2]]
  })");
  CHECK_FALSE(parse_job_input(with_ab).p_ab_defaulted);
  CHECK(parse_job_input(with_ab).p_ab.parameter() == 0.2);

  try {
    (void)parse_job_input(Json::parse(R"({"pa": [0.5], "pb": [0.5, 0.5],
                                          "p_ba": [[0.5,0.5],[0.5,0.5]]})"));
    FAIL("expected MALFORMED_INPUT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedInput);
    CHECK(std::string(e.what()).find("/pa") != std::string::npos);
  }

  // value-level violations surface the probmodel codes
  CHECK_ERROR_CODE(parse_job_input(Json::parse(
                       R"({"pa": [0.6, 0.4], "pb": [0.5, 0.5],
                           "p_ba": [[0.7, 0.2], [0.3, 0.8]]})")),
                   NotDoublyStochastic);
}

TEST_CASE("generated instances round-trip through their JSON form") {
  const auto inst = generate(31415);
  const auto back = parse_instance(to_json(inst));
  CHECK(back.context.pa == inst.context.pa);
  CHECK(back.context.pb == inst.context.pb);
  CHECK(back.p_ba.entries == inst.p_ba.entries);
  CHECK(back.p_ab.entries == inst.p_ab.entries);
  CHECK(back.theta_truth == inst.theta_truth);
  CHECK(back.seed == inst.seed);
}

TEST_CASE("reports echo their input byte-stably") {
  const std::string raw = R"({"pa":[0.5,0.5],"pb":[0.8,0.2],"p_ba":[[0.5,0.5],[0.5,0.5]]})";
  const Json input = Json::parse(raw);
  const Json report = make_report("classify", input, Json::object(), Json::object(), 0);

  // parsing the echoed input reproduces the job byte-identically modulo
  // whitespace (compare through one canonical serialization)
  const std::string echoed = write_json(report["input"]);
  CHECK(echoed == write_json(Json::parse(raw)));
  CHECK(Json::parse(echoed) == input);

  CHECK(report["version"].get<std::string>() == std::string("0.1.0"));
  CHECK(report["status"] == "ok");
}

TEST_CASE("constraint overrides parse with defaults") {
  const GenConstraints defaults = parse_constraints(Json::object());
  CHECK(defaults.p_range[0] == 0.05);
  CHECK_FALSE(defaults.symmetric);

  const GenConstraints cons = parse_constraints(Json::parse(
      R"({"theta_range": [1.0, 2.0], "symmetric": true, "min_gap": 0.05})"));
  CHECK(cons.theta_range[0] == 1.0);
  CHECK(cons.symmetric);
  CHECK(cons.min_gap == 0.05);
}
