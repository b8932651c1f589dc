#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qlra/verify.hpp"

namespace qlra {

using Json = nlohmann::json;

// Serialization conventions: complex numbers as {"re": x, "im": y},
// angles in radians, floats written with up to 17 significant digits so
// doubles round-trip losslessly.

Json to_json(const Pair& p);
Json to_json(const Complex& z);
Json to_json(const ComplexPair& v);
Json to_json(const TransitionMatrix& m);
Json to_json(const ContextData& c);
Json to_json(const InterferenceProfile& p);
Json to_json(const QLState& s);
Json to_json(const Basis& b);
Json to_json(const Expansion& e);
Json to_json(const BornResiduals& r);
Json to_json(const UnitaryMap& u);
Json to_json(const EquivalenceReport& r);
Json to_json(const GeneratedInstance& inst);
Json to_json(const CountTable& t);
Json to_json(const EmpiricalRun& run);
Json to_json(const VerifyResult& r);

/// Input document for classify / represent / equiv: {"pa": [..], "pb": [..],
/// "p_ba": [[..],[..]], "p_ab": [[..],[..]]?}. When p_ab is absent it
/// defaults to the transpose-symmetric partner (p' = p) and the flag
/// records it. Shape violations throw MALFORMED_INPUT with a JSON pointer
/// to the offending field; value violations propagate the probmodel errors.
struct JobInput {
  ContextData context;
  TransitionMatrix p_ba;
  TransitionMatrix p_ab;
  bool p_ab_defaulted = false;
};

JobInput parse_job_input(const Json& doc);

/// Optional generator overrides: {"theta_range": [lo,hi], "p_range": [lo,hi],
/// "pa_range": [lo,hi], "symmetric": bool, "min_gap": x}.
GenConstraints parse_constraints(const Json& doc);

/// Inverse of to_json(GeneratedInstance); validates all components.
GeneratedInstance parse_instance(const Json& doc);

/// Serializer with "%.17g" doubles (nlohmann's default shortest-round-trip
/// form does not pin the digit count). Non-finite numbers become null.
std::string write_json(const Json& doc, bool pretty = false);

/// Report envelope shared by all CLI subcommands.
Json make_report(const std::string& command, const Json& input_echo,
                 const Json& payload, const Json& residual_summary,
                 int exit_status);

Json error_report(const std::string& command, const Json& input_echo,
                  const std::string& code, const std::string& message,
                  int exit_status);

}  // namespace qlra
