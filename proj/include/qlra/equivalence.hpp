#pragma once

#include <map>
#include <optional>
#include <string>

#include "qlra/engine.hpp"

namespace qlra {

/// Real orthogonal change of representation: maps the conjugate basis of
/// the source space onto the standard basis of the mirrored space.
struct UnitaryMap {
  Matrix2 m;
};

/// m = [[sqrt p00, sqrt p01], [sqrt p10, -sqrt p11]]. For doubly stochastic
/// input this matrix is symmetric, so it coincides with the basis-change
/// transpose and m * conjugate_basis_vector_j = standard_j.
UnitaryMap unitary_map(const TransitionMatrix& p_ba);

ComplexPair apply_unitary(const UnitaryMap& u, const ComplexPair& v) noexcept;

/// Max deviation of m^T m from the identity.
double unitarity_deviation(const UnitaryMap& u) noexcept;

enum class MatchKind { Direct, Conjugate, None };

const char* to_string(MatchKind k) noexcept;

struct PhaseMatch {
  bool equivalent;
  MatchKind kind;
  std::optional<double> gamma;  // matched phase in [0, 2pi), absent when None
  double overlap;               // best of the direct / conjugate overlaps
};

/// Direct match: |<s1, s2>| >= 1 - tol, gamma = arg<s2, s1>. Otherwise the
/// componentwise conjugate of s2 is tested (the residual freedom left by
/// fixing both arccos branches to [0, pi]); otherwise None.
PhaseMatch phase_equivalent(const ComplexPair& s1, const ComplexPair& s2,
                            double tol = kEpsEquiv);
PhaseMatch phase_equivalent(const QLState& s1, const QLState& s2,
                            double tol = kEpsEquiv);

struct EquivalenceReport {
  bool matrices_symmetric;    // |p - p'| <= kEpsSym
  bool phase_equivalent;
  MatchKind match_kind;
  std::optional<double> matched_phase;
  double overlap;
  std::map<std::string, double> identity_residuals;
};

/// Raised when the equivalence verdict and the matrix-symmetry verdict
/// disagree at the current tolerances. Carries the full report as evidence.
class TheoremViolation : public Error {
 public:
  TheoremViolation(EquivalenceReport report, const std::string& message)
      : Error(ErrorCode::TheoremViolation, message), report_(std::move(report)) {}

  const EquivalenceReport& report() const noexcept { return report_; }

 private:
  EquivalenceReport report_;
};

/// Builds both representations, applies the unitary map, and decides
/// phase equivalence. Throws NOT_TRIGONOMETRIC if either side is
/// hyperbolic, and TheoremViolation if phase_equivalent !=
/// matrices_symmetric (never silently accepted).
EquivalenceReport theorem_check(const ContextData& c,
                                const TransitionMatrix& p_ba,
                                const TransitionMatrix& p_ab);

/// Numerical residuals |LHS - RHS| of the identity chain connecting the
/// two representations. All vanish when the matrices are symmetric; the
/// final cosine match is the one that breaks under asymmetry. Keys:
///   alpha1_interference    a-side total probability + interference term
///   gamma_real_part        Re(psi_a2 conj(psi_a1)) vs transition quantities
///   beta1_cosine_scaled    scaled closed form of cos theta_b1
///   phase_product_collapse polynomial collapse of the phase product
///   cosine_match           cos(gamma_a2 - gamma_a1) vs cos theta_b1
std::map<std::string, double> proof_identity_suite(const ContextData& c,
                                                   const TransitionMatrix& p_ba,
                                                   const TransitionMatrix& p_ab);

}  // namespace qlra
