#pragma once

#include <complex>

#include "qlra/probmodel.hpp"

namespace qlra {

using Complex = std::complex<double>;
using ComplexPair = std::array<Complex, 2>;

/// <x, y> = sum_k x_k * conj(y_k)
Complex inner(const ComplexPair& x, const ComplexPair& y) noexcept;
double norm(const ComplexPair& x) noexcept;

/// Orthonormal basis of the conditioning observable inside the target
/// representation space: v1 = (sqrt m00, sqrt m10), v2 = (sqrt m01, -sqrt m11).
/// Orthonormality is forced by double stochasticity.
struct Basis {
  std::array<double, 2> v1;
  std::array<double, 2> v2;
};

/// Max deviation of the Gram matrix from the identity.
double gram_deviation(const Basis& b) noexcept;

/// Reconstructed amplitude in the standard basis of its representation
/// space, tagged with the data that produced it. States are equal up to a
/// global phase factor (see phase_equivalent in equivalence.hpp).
struct QLState {
  ComplexPair amp;
  Orientation rep;
  ContextData context;
  TransitionMatrix matrix;
  InterferenceProfile profile;
};

/// psi_k = sqrt(cond_1 m[k][0]) + e^{i theta_k} sqrt(cond_2 m[k][1]).
/// |psi_k|^2 reproduces the target marginal and ||psi|| = 1.
/// Throws NOT_TRIGONOMETRIC for hyperbolic data. The matrix orientation
/// must match rep.
QLState build_state(const ContextData& c, const TransitionMatrix& m,
                    Orientation rep);

Basis conjugate_basis(const TransitionMatrix& m);

struct Expansion {
  ComplexPair coefficients;
  double residual;               // || c1 v1 + c2 v2 - amp ||
  double coefficient_deviation;  // distance from (sqrt cond_1, e^{i theta_1} sqrt cond_2)
};

/// Expands the state over conjugate_basis(s.matrix) and checks the
/// closed form of the coefficients: c1 = sqrt(cond_1),
/// c2 = e^{i theta_1} sqrt(cond_2). A mismatch signals a phase-branch
/// inconsistency and throws EXPANSION_MISMATCH.
Expansion expand_in_conjugate_basis(const QLState& s);

struct BornResiduals {
  Pair target;     // | |<s, standard_k>|^2 - target marginal_k |
  Pair conjugate;  // | |<s, conjugate basis_j>|^2 - conditioning marginal_j |

  double max() const noexcept;
};

BornResiduals born_residuals(const QLState& s);

}  // namespace qlra
