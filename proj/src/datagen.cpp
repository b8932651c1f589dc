#include "qlra/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qlra {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return splitmix64(base + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

namespace {

constexpr int kMaxResamples = 1000000;

bool in_open_unit(double lo, double hi) {
  return lo > 0.0 && hi < 1.0 && lo <= hi;
}

}  // namespace

GeneratedInstance generate(std::uint64_t seed, const GenConstraints& cons) {
  if (!in_open_unit(cons.p_range[0], cons.p_range[1]) ||
      !in_open_unit(cons.pa_range[0], cons.pa_range[1])) {
    throw std::invalid_argument("probability ranges must lie inside (0, 1)");
  }
  if (cons.theta_range[0] <= 0.0 || cons.theta_range[1] >= std::numbers::pi ||
      cons.theta_range[0] > cons.theta_range[1]) {
    throw std::invalid_argument("theta range must lie inside (0, pi)");
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    const double p = uniform_in(rng, cons.p_range[0], cons.p_range[1]);
    double pp = uniform_in(rng, cons.p_range[0], cons.p_range[1]);
    if (cons.symmetric) pp = p;
    if (std::abs(p - pp) < cons.min_gap) continue;
    const double pa1 = uniform_in(rng, cons.pa_range[0], cons.pa_range[1]);
    const double theta = uniform_in(rng, cons.theta_range[0], cons.theta_range[1]);

    // forward interference formula for the b marginal
    const double pb1 = pa1 * p + (1.0 - pa1) * (1.0 - p) +
                       2.0 * std::cos(theta) *
                           std::sqrt(pa1 * p * (1.0 - pa1) * (1.0 - p));
    if (pb1 < kEpsGen || pb1 > 1.0 - kEpsGen) continue;

    const ContextData context =
        validate_context({pa1, 1.0 - pa1}, {pb1, 1.0 - pb1});
    const TransitionMatrix p_ba = transition_from_parameter(p, Orientation::BGivenA);
    const TransitionMatrix p_ab = transition_from_parameter(pp, Orientation::AGivenB);

    // the b|a side is trigonometric by construction; the mirrored side is not
    if (!interference_coefficients(context, p_ab).trigonometric()) continue;

    return GeneratedInstance{context, p_ba, p_ab, theta,
                             {std::cos(theta), -std::cos(theta)}, seed};
  }
  throw Error(ErrorCode::GenerationExhausted,
              "no admissible instance after 10^6 draws");
}

CountTable simulate_counts(const GeneratedInstance& inst, std::uint64_t n,
                           std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  std::mt19937_64 rng(seed);
  CountTable t{n, {0, 0}, {{{0, 0}, {0, 0}}}, seed};
  const double pa1 = inst.context.pa[0];
  for (std::uint64_t i = 0; i < n; ++i) {
    const int a = uniform01(rng) < pa1 ? 0 : 1;
    const int b = uniform01(rng) < inst.p_ba.entries[0][a] ? 0 : 1;
    ++t.a_counts[a];
    ++t.b_given_a[b][a];
  }
  return t;
}

namespace {

// additive floor: strictly positive even at zero counts, exact unit sum
double floored_frequency(double count, double n) {
  return (count / n + 2.0 * kEpsPos) / (1.0 + 4.0 * kEpsPos);
}

}  // namespace

EmpiricalEstimate estimate_from_counts(const CountTable& counts) {
  if (counts.n < 1) throw std::invalid_argument("empty count table");
  const double n = static_cast<double>(counts.n);

  const double pa1 = floored_frequency(static_cast<double>(counts.a_counts[0]), n);
  const double pb1 = floored_frequency(
      static_cast<double>(counts.b_given_a[0][0] + counts.b_given_a[0][1]), n);
  // pooled diagonal MLE of the doubly stochastic parameter
  const double p = floored_frequency(
      static_cast<double>(counts.b_given_a[0][0] + counts.b_given_a[1][1]), n);

  return EmpiricalEstimate{
      validate_context({pa1, 1.0 - pa1}, {pb1, 1.0 - pb1}),
      transition_from_parameter(p, Orientation::BGivenA)};
}

EmpiricalRun empirical_pipeline(const GeneratedInstance& inst, std::uint64_t n,
                                std::uint64_t seed) {
  const CountTable counts = simulate_counts(inst, n, seed);
  const EmpiricalEstimate est = estimate_from_counts(counts);
  const InterferenceProfile profile =
      interference_coefficients(est.context, est.matrix);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  EmpiricalRun run{counts, est, profile, {nan, nan}, {nan, nan}, nan};
  if (!profile.trigonometric()) return run;

  // residuals against the generating measure of the counts
  const Pair pb_gen = classical_ftp(inst.context.pa, inst.p_ba);
  const QLState state = build_state(est.context, est.matrix, Orientation::BGivenA);
  const Basis basis = conjugate_basis(est.matrix);
  for (int k = 0; k < 2; ++k) {
    run.target_residuals[k] = std::abs(std::norm(state.amp[k]) - pb_gen[k]);
  }
  const Complex c1 = state.amp[0] * basis.v1[0] + state.amp[1] * basis.v1[1];
  const Complex c2 = state.amp[0] * basis.v2[0] + state.amp[1] * basis.v2[1];
  run.conjugate_residuals[0] = std::abs(std::norm(c1) - inst.context.pa[0]);
  run.conjugate_residuals[1] = std::abs(std::norm(c2) - inst.context.pa[1]);
  run.max_born_residual =
      std::max({run.target_residuals[0], run.target_residuals[1],
                run.conjugate_residuals[0], run.conjugate_residuals[1]});
  return run;
}

}  // namespace qlra
