#include "qlra/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qlra {

const char* to_string(MatchKind k) noexcept {
  switch (k) {
    case MatchKind::Direct: return "direct";
    case MatchKind::Conjugate: return "conjugate";
    case MatchKind::None: return "none";
  }
  return "none";
}

UnitaryMap unitary_map(const TransitionMatrix& p_ba) {
  const Matrix2& e = p_ba.entries;
  return UnitaryMap{{{{std::sqrt(e[0][0]), std::sqrt(e[0][1])},
                      {std::sqrt(e[1][0]), -std::sqrt(e[1][1])}}}};
}

ComplexPair apply_unitary(const UnitaryMap& u, const ComplexPair& v) noexcept {
  return {u.m[0][0] * v[0] + u.m[0][1] * v[1],
          u.m[1][0] * v[0] + u.m[1][1] * v[1]};
}

double unitarity_deviation(const UnitaryMap& u) noexcept {
  double dev = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double mtm = u.m[0][i] * u.m[0][j] + u.m[1][i] * u.m[1][j];
      const double mmt = u.m[i][0] * u.m[j][0] + u.m[i][1] * u.m[j][1];
      const double id = i == j ? 1.0 : 0.0;
      dev = std::max({dev, std::abs(mtm - id), std::abs(mmt - id)});
    }
  }
  return dev;
}

namespace {

double normalize_angle(double a) noexcept {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

ComplexPair conjugated(const ComplexPair& v) noexcept {
  return {std::conj(v[0]), std::conj(v[1])};
}

}  // namespace

PhaseMatch phase_equivalent(const ComplexPair& s1, const ComplexPair& s2,
                            double tol) {
  const double direct = std::abs(inner(s1, s2));
  const ComplexPair s2c = conjugated(s2);
  const double conj = std::abs(inner(s1, s2c));

  if (direct >= 1.0 - tol) {
    const double gamma = normalize_angle(std::arg(inner(s2, s1)));
    return PhaseMatch{true, MatchKind::Direct, gamma, direct};
  }
  if (conj >= 1.0 - tol) {
    const double gamma = normalize_angle(std::arg(inner(s2c, s1)));
    return PhaseMatch{true, MatchKind::Conjugate, gamma, conj};
  }
  return PhaseMatch{false, MatchKind::None, std::nullopt, std::max(direct, conj)};
}

PhaseMatch phase_equivalent(const QLState& s1, const QLState& s2, double tol) {
  return phase_equivalent(s1.amp, s2.amp, tol);
}

std::map<std::string, double> proof_identity_suite(const ContextData& c,
                                                   const TransitionMatrix& p_ba,
                                                   const TransitionMatrix& p_ab) {
  const QLState psi_ab = build_state(c, p_ab, Orientation::AGivenB);
  const InterferenceProfile prof_ba = interference_coefficients(c, p_ba);
  if (!prof_ba.trigonometric()) {
    throw Error(ErrorCode::NotTrigonometric, "b|a side is hyperbolic");
  }

  const double big_a = c.pa[0];          // p^a_{alpha1}
  const double big_p = c.pb[0];          // p^b_{beta1}
  const double p = p_ba.parameter();
  const double q = p_ab.parameter();
  const double cos_theta_a1 = std::cos(psi_ab.profile.theta[0]);
  const double cos_theta_b1 = std::cos(prof_ba.theta[0]);

  // cos(gamma_a2 - gamma_a1) through the amplitude product; the moduli are
  // sqrt(pa) by Born's rule on the a|b side.
  const Complex prod = psi_ab.amp[1] * std::conj(psi_ab.amp[0]);
  const double cos_gamma = prod.real() / std::abs(prod);

  std::map<std::string, double> residuals;

  // a-side total probability with interference term reproduces pa_1
  {
    const double lhs = big_a;
    const double rhs = big_p * q + (1.0 - big_p) * (1.0 - q) +
                       2.0 * cos_theta_a1 *
                           std::sqrt(big_p * q * (1.0 - big_p) * (1.0 - q));
    residuals["alpha1_interference"] = std::abs(lhs - rhs);
  }

  // real part of psi_a2 conj(psi_a1) in transition quantities
  {
    const double lhs = std::sqrt(big_a * (1.0 - big_a)) * cos_gamma;
    const double rhs = (2.0 * big_p - 1.0) * std::sqrt(q * (1.0 - q)) +
                       cos_theta_a1 * (1.0 - 2.0 * q) *
                           std::sqrt(big_p * (1.0 - big_p));
    residuals["gamma_real_part"] = std::abs(lhs - rhs);
  }

  // closed form of 2 sqrt(pa1 pa2) cos(theta_b1)
  {
    const double lhs = 2.0 * std::sqrt(big_a * (1.0 - big_a)) * cos_theta_b1;
    const double rhs = (big_a - 1.0 + big_p + p - 2.0 * p * big_a) /
                       std::sqrt(p * (1.0 - p));
    residuals["beta1_cosine_scaled"] = std::abs(lhs - rhs);
  }

  // polynomial collapse of the scaled phase product
  {
    const double lhs = 2.0 * std::sqrt(q * (1.0 - q)) *
                       std::sqrt(big_a * (1.0 - big_a)) * cos_gamma;
    const double rhs = big_a - 1.0 + big_p + q - 2.0 * q * big_a;
    residuals["phase_product_collapse"] = std::abs(lhs - rhs);
  }

  // the equality that holds iff the matrices agree
  residuals["cosine_match"] = std::abs(cos_gamma - cos_theta_b1);

  return residuals;
}

EquivalenceReport theorem_check(const ContextData& c,
                                const TransitionMatrix& p_ba,
                                const TransitionMatrix& p_ab) {
  if (p_ba.orientation != Orientation::BGivenA ||
      p_ab.orientation != Orientation::AGivenB) {
    throw std::invalid_argument("theorem_check expects a (b|a, a|b) matrix pair");
  }
  const bool symmetric =
      std::abs(p_ba.parameter() - p_ab.parameter()) <= kEpsSym;

  const QLState psi_ba = build_state(c, p_ba, Orientation::BGivenA);
  const QLState psi_ab = build_state(c, p_ab, Orientation::AGivenB);
  const ComplexPair mapped = apply_unitary(unitary_map(p_ba), psi_ba.amp);
  const PhaseMatch match = phase_equivalent(mapped, psi_ab.amp);

  EquivalenceReport report{symmetric, match.equivalent, match.kind,
                           match.gamma, match.overlap,
                           proof_identity_suite(c, p_ba, p_ab)};

  if (report.phase_equivalent != report.matrices_symmetric) {
    throw TheoremViolation(
        report, std::string("equivalence verdict (") +
                    (report.phase_equivalent ? "true" : "false") +
                    ") disagrees with matrix symmetry (" +
                    (report.matrices_symmetric ? "true" : "false") +
                    "), overlap " + std::to_string(report.overlap));
  }
  return report;
}

}  // namespace qlra
