#include "qlra/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qlra {

Complex inner(const ComplexPair& x, const ComplexPair& y) noexcept {
  return x[0] * std::conj(y[0]) + x[1] * std::conj(y[1]);
}

double norm(const ComplexPair& x) noexcept {
  return std::sqrt(std::norm(x[0]) + std::norm(x[1]));
}

double gram_deviation(const Basis& b) noexcept {
  const double g11 = b.v1[0] * b.v1[0] + b.v1[1] * b.v1[1];
  const double g22 = b.v2[0] * b.v2[0] + b.v2[1] * b.v2[1];
  const double g12 = b.v1[0] * b.v2[0] + b.v1[1] * b.v2[1];
  return std::max({std::abs(g11 - 1.0), std::abs(g22 - 1.0), std::abs(g12)});
}

QLState build_state(const ContextData& c, const TransitionMatrix& m,
                    Orientation rep) {
  if (m.orientation != rep) {
    throw std::invalid_argument("transition matrix orientation does not match rep");
  }
  const InterferenceProfile profile = interference_coefficients(c, m);
  if (!profile.trigonometric()) {
    throw Error(ErrorCode::NotTrigonometric,
                "amplitude construction requires |lambda| <= 1, got (" +
                    std::to_string(profile.lambda[0]) + ", " +
                    std::to_string(profile.lambda[1]) + ")");
  }
  const Pair& cond = conditioning_marginals(c, rep);
  ComplexPair amp;
  for (int k = 0; k < 2; ++k) {
    const double a = std::sqrt(cond[0] * m.entries[k][0]);
    const double b = std::sqrt(cond[1] * m.entries[k][1]);
    amp[k] = a + std::polar(b, profile.theta[k]);
  }
  return QLState{amp, rep, c, m, profile};
}

Basis conjugate_basis(const TransitionMatrix& m) {
  return Basis{{std::sqrt(m.entries[0][0]), std::sqrt(m.entries[1][0])},
               {std::sqrt(m.entries[0][1]), -std::sqrt(m.entries[1][1])}};
}

Expansion expand_in_conjugate_basis(const QLState& s) {
  const Basis basis = conjugate_basis(s.matrix);
  const ComplexPair coeffs{
      s.amp[0] * basis.v1[0] + s.amp[1] * basis.v1[1],
      s.amp[0] * basis.v2[0] + s.amp[1] * basis.v2[1]};

  const ComplexPair rebuilt{
      coeffs[0] * basis.v1[0] + coeffs[1] * basis.v2[0],
      coeffs[0] * basis.v1[1] + coeffs[1] * basis.v2[1]};
  const ComplexPair defect{rebuilt[0] - s.amp[0], rebuilt[1] - s.amp[1]};
  const double residual = norm(defect);

  const Pair& cond = conditioning_marginals(s.context, s.rep);
  const Complex expected0{std::sqrt(cond[0]), 0.0};
  const Complex expected1 = std::polar(std::sqrt(cond[1]), s.profile.theta[0]);
  const double deviation = std::max(std::abs(coeffs[0] - expected0),
                                    std::abs(coeffs[1] - expected1));

  if (residual > kEpsNum || deviation > kEpsNum) {
    throw Error(ErrorCode::ExpansionMismatch,
                "residual " + std::to_string(residual) + ", coefficient deviation " +
                    std::to_string(deviation));
  }
  return Expansion{coeffs, residual, deviation};
}

double BornResiduals::max() const noexcept {
  return std::max({target[0], target[1], conjugate[0], conjugate[1]});
}

BornResiduals born_residuals(const QLState& s) {
  const Pair& target = target_marginals(s.context, s.rep);
  const Pair& cond = conditioning_marginals(s.context, s.rep);
  const Basis basis = conjugate_basis(s.matrix);

  BornResiduals r{};
  for (int k = 0; k < 2; ++k) {
    r.target[k] = std::abs(std::norm(s.amp[k]) - target[k]);
  }
  const Complex c1 = s.amp[0] * basis.v1[0] + s.amp[1] * basis.v1[1];
  const Complex c2 = s.amp[0] * basis.v2[0] + s.amp[1] * basis.v2[1];
  r.conjugate[0] = std::abs(std::norm(c1) - cond[0]);
  r.conjugate[1] = std::abs(std::norm(c2) - cond[1]);
  return r;
}

}  // namespace qlra
