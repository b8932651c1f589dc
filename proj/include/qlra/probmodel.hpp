#pragma once

#include <array>

#include "qlra/errors.hpp"

namespace qlra {

// Tolerance budget for double precision at 2x2 scale (a handful of
// multiply/add/sqrt per derived quantity loses well under 1e-13).
inline constexpr double kEpsSum = 1e-9;    // stochasticity sums
inline constexpr double kEpsPos = 1e-12;   // strict positivity floor
inline constexpr double kEpsNum = 1e-10;   // derived numerical equalities
inline constexpr double kEpsEquiv = 1e-9;  // overlap threshold for state equality
inline constexpr double kEpsSym = 1e-9;    // matrix parameter comparison
inline constexpr double kEpsGen = 1e-6;    // generator interiority margin

using Pair = std::array<double, 2>;
using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Conditioning order. Entries are always indexed
/// entry[row][col] = P(row outcome | col outcome), so columns are the
/// conditioning outcomes in either orientation.
enum class Orientation { BGivenA, AGivenB };

const char* to_string(Orientation o) noexcept;

/// 2x2 matrix of conditional probabilities, validated to be doubly
/// stochastic and strictly positive. Double stochasticity forces the
/// single-parameter form [[p, 1-p], [1-p, p]].
struct TransitionMatrix {
  Matrix2 entries;
  Orientation orientation;

  double parameter() const noexcept { return entries[0][0]; }
};

/// Marginal distributions of the two observables under one context.
struct ContextData {
  Pair pa;
  Pair pb;
};

enum class Classification { Trigonometric, Hyperbolic };

const char* to_string(Classification c) noexcept;

/// Interference coefficients of a context relative to a transition matrix,
/// one per target outcome, with the phase angles they induce.
///
/// Phase branch: theta[0] = arccos(lambda[0]) in [0, pi], theta[1] =
/// theta[0] + pi reduced mod 2pi. Values of |lambda| in (1, 1+kEpsNum] are
/// clamped to +-1 before arccos and still classify as trigonometric;
/// beyond that the data is hyperbolic and theta is NaN.
struct InterferenceProfile {
  Pair lambda;  // raw coefficients (unclamped)
  Pair theta;
  Classification classification;

  bool trigonometric() const noexcept {
    return classification == Classification::Trigonometric;
  }
};

/// Throws NOT_STOCHASTIC, NOT_DOUBLY_STOCHASTIC or NOT_STRICTLY_POSITIVE.
TransitionMatrix validate_transition(const Matrix2& raw, Orientation orientation);

/// Builds the exact doubly stochastic matrix [[p,1-p],[1-p,p]].
TransitionMatrix transition_from_parameter(double p, Orientation orientation);

/// Throws NOT_STOCHASTIC or NOT_STRICTLY_POSITIVE.
ContextData validate_context(const Pair& pa, const Pair& pb);

/// Marginals of the conditioning observable for this orientation
/// (pa for b|a, pb for a|b); target_marginals gives the other one.
const Pair& conditioning_marginals(const ContextData& c, Orientation o) noexcept;
const Pair& target_marginals(const ContextData& c, Orientation o) noexcept;

/// Classical formula of total probability: predicted target marginals
/// sum_j cond[j] * m[k][j]. Components sum to 1 for valid inputs.
Pair classical_ftp(const Pair& cond, const TransitionMatrix& m);

/// lambda_k = (target_k - ftp_k) / (2 sqrt(prod_j cond_j m[k][j])).
/// Throws DEGENERATE_PRODUCT if a product under the root falls below
/// kEpsPos^2 (blocked upstream by strict positivity, still guarded).
InterferenceProfile interference_coefficients(const ContextData& c,
                                              const TransitionMatrix& m);

}  // namespace qlra
