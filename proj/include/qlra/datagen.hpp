#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "qlra/engine.hpp"

namespace qlra {

/// RNG contract (kept stable so corpora reproduce across implementations):
/// mt19937_64 seeded directly with the given 64-bit seed; uniform doubles
/// take the top 53 bits of one output word, u = (next() >> 11) * 2^-53;
/// per-trial seeds in batch sweeps are splitmix64(base + (i+1)*gamma) with
/// the standard golden-ratio gamma.
inline constexpr const char* kRngAlgorithm = "mt19937_64/u53";

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;
double uniform01(std::mt19937_64& rng);
double uniform_in(std::mt19937_64& rng, double lo, double hi);

struct GenConstraints {
  Pair theta_range{0.05, std::numbers::pi - 0.05};
  Pair p_range{0.05, 0.95};
  Pair pa_range{0.05, 0.95};
  bool symmetric = false;  // force the a|b parameter equal to the b|a one
  double min_gap = 0.0;    // resample until |p - p'| >= min_gap
};

/// Forward-constructed instance: the b marginal is computed from
/// (pa, p, theta) through the interference formula, so the ground-truth
/// phase and coefficients are known exactly.
struct GeneratedInstance {
  ContextData context;
  TransitionMatrix p_ba;
  TransitionMatrix p_ab;
  double theta_truth;  // theta_{beta1} used in construction
  Pair lambda_truth;   // (cos theta, -cos theta)
  std::uint64_t seed;
};

/// Samples p, p', pa_1, theta in that order and rejects until all
/// probabilities are >= kEpsGen and the a|b side classifies trigonometric
/// (the b|a side is trigonometric by construction). Deterministic given
/// seed. Throws GENERATION_EXHAUSTED after 10^6 rejected draws.
GeneratedInstance generate(std::uint64_t seed, const GenConstraints& constraints = {});

/// Counts from the compound experiment: N draws of a from pa, then one
/// b draw per sample from the matching column of p_ba.
struct CountTable {
  std::uint64_t n;
  std::array<std::uint64_t, 2> a_counts;
  std::array<std::array<std::uint64_t, 2>, 2> b_given_a;  // [b outcome][a outcome]
  std::uint64_t seed;
};

CountTable simulate_counts(const GeneratedInstance& inst, std::uint64_t n,
                           std::uint64_t seed);

struct EmpiricalEstimate {
  ContextData context;
  TransitionMatrix matrix;
};

/// Maximum-likelihood frequencies with an additive floor of 2*kEpsPos
/// (keeps estimates strictly above the positivity gate). The matrix
/// parameter is the pooled diagonal MLE (k_b1a1 + k_b2a2) / N, which is
/// the ML estimate under the doubly stochastic model; raw per-column
/// frequencies are not doubly stochastic at finite N.
EmpiricalEstimate estimate_from_counts(const CountTable& counts);

/// Finite-sample pipeline: simulate, estimate, classify and rebuild.
/// Born residuals are measured against the generating measure of the
/// counts, i.e. the true pa and the total-probability b marginal
/// classical_ftp(pa, p_ba); the compound experiment carries no
/// interference term, so that is the distribution the estimates converge
/// to. Residuals are NaN when the estimate classifies hyperbolic.
struct EmpiricalRun {
  CountTable counts;
  EmpiricalEstimate estimate;
  InterferenceProfile profile;
  Pair target_residuals;
  Pair conjugate_residuals;
  double max_born_residual;
};

EmpiricalRun empirical_pipeline(const GeneratedInstance& inst, std::uint64_t n,
                                std::uint64_t seed);

}  // namespace qlra
