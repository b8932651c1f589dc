#include "qlra/probmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qlra {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotStochastic: return "NOT_STOCHASTIC";
    case ErrorCode::NotDoublyStochastic: return "NOT_DOUBLY_STOCHASTIC";
    case ErrorCode::NotStrictlyPositive: return "NOT_STRICTLY_POSITIVE";
    case ErrorCode::DegenerateProduct: return "DEGENERATE_PRODUCT";
    case ErrorCode::NotTrigonometric: return "NOT_TRIGONOMETRIC";
    case ErrorCode::ExpansionMismatch: return "EXPANSION_MISMATCH";
    case ErrorCode::TheoremViolation: return "THEOREM_VIOLATION";
    case ErrorCode::GenerationExhausted: return "GENERATION_EXHAUSTED";
    case ErrorCode::MalformedInput: return "MALFORMED_INPUT";
  }
  return "UNKNOWN";
}

const char* to_string(Orientation o) noexcept {
  return o == Orientation::BGivenA ? "b_given_a" : "a_given_b";
}

const char* to_string(Classification c) noexcept {
  return c == Classification::Trigonometric ? "trigonometric" : "hyperbolic";
}

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + " is not finite");
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

TransitionMatrix validate_transition(const Matrix2& raw, Orientation orientation) {
  for (const auto& row : raw) {
    for (double x : row) require_finite(x, "transition entry");
  }
  for (int col = 0; col < 2; ++col) {
    const double s = raw[0][col] + raw[1][col];
    if (std::abs(s - 1.0) > kEpsSum) {
      throw Error(ErrorCode::NotStochastic,
                  "column " + std::to_string(col) + " sums to " + fmt(s));
    }
  }
  for (int row = 0; row < 2; ++row) {
    const double s = raw[row][0] + raw[row][1];
    if (std::abs(s - 1.0) > kEpsSum) {
      throw Error(ErrorCode::NotDoublyStochastic,
                  "row " + std::to_string(row) + " sums to " + fmt(s));
    }
  }
  for (const auto& row : raw) {
    for (double x : row) {
      if (x < kEpsPos) {
        throw Error(ErrorCode::NotStrictlyPositive, "entry " + fmt(x));
      }
    }
  }
  return TransitionMatrix{raw, orientation};
}

TransitionMatrix transition_from_parameter(double p, Orientation orientation) {
  return validate_transition({{{p, 1.0 - p}, {1.0 - p, p}}}, orientation);
}

ContextData validate_context(const Pair& pa, const Pair& pb) {
  for (double x : pa) require_finite(x, "pa entry");
  for (double x : pb) require_finite(x, "pb entry");
  const double sa = pa[0] + pa[1];
  if (std::abs(sa - 1.0) > kEpsSum) {
    throw Error(ErrorCode::NotStochastic, "pa sums to " + fmt(sa));
  }
  const double sb = pb[0] + pb[1];
  if (std::abs(sb - 1.0) > kEpsSum) {
    throw Error(ErrorCode::NotStochastic, "pb sums to " + fmt(sb));
  }
  for (double x : pa) {
    if (x < kEpsPos) throw Error(ErrorCode::NotStrictlyPositive, "pa entry " + fmt(x));
  }
  for (double x : pb) {
    if (x < kEpsPos) throw Error(ErrorCode::NotStrictlyPositive, "pb entry " + fmt(x));
  }
  return ContextData{pa, pb};
}

const Pair& conditioning_marginals(const ContextData& c, Orientation o) noexcept {
  return o == Orientation::BGivenA ? c.pa : c.pb;
}

const Pair& target_marginals(const ContextData& c, Orientation o) noexcept {
  return o == Orientation::BGivenA ? c.pb : c.pa;
}

Pair classical_ftp(const Pair& cond, const TransitionMatrix& m) {
  return {m.entries[0][0] * cond[0] + m.entries[0][1] * cond[1],
          m.entries[1][0] * cond[0] + m.entries[1][1] * cond[1]};
}

InterferenceProfile interference_coefficients(const ContextData& c,
                                              const TransitionMatrix& m) {
  const Pair& cond = conditioning_marginals(c, m.orientation);
  const Pair& target = target_marginals(c, m.orientation);
  const Pair ftp = classical_ftp(cond, m);

  Pair lambda{};
  for (int k = 0; k < 2; ++k) {
    const double prod = cond[0] * m.entries[k][0] * cond[1] * m.entries[k][1];
    if (prod < kEpsPos * kEpsPos) {
      throw Error(ErrorCode::DegenerateProduct,
                  "probability product under the root is " + fmt(prod));
    }
    lambda[k] = (target[k] - ftp[k]) / (2.0 * std::sqrt(prod));
  }

  const double mag = std::max(std::abs(lambda[0]), std::abs(lambda[1]));
  if (mag > 1.0 + kEpsNum) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return InterferenceProfile{lambda, {nan, nan}, Classification::Hyperbolic};
  }

  // |lambda| in (1, 1+kEpsNum] clamps to the boundary.
  const double clamped = std::clamp(lambda[0], -1.0, 1.0);
  const double theta1 = std::acos(clamped);
  const double theta2 = std::fmod(theta1 + std::numbers::pi, 2.0 * std::numbers::pi);
  return InterferenceProfile{lambda, {theta1, theta2}, Classification::Trigonometric};
}

}  // namespace qlra
