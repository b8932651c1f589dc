#include "qlra/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qlra {

namespace {

void check(VerifyResult& r, bool ok, const std::string& what) {
  if (!ok) r.failures.push_back(what);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

VerifyResult run_verification(const VerifyOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (opts.tol <= 0.0 || opts.overlap_tol <= 0.0) {
    throw std::invalid_argument("tolerances must be positive");
  }

  VerifyResult r;
  r.trials = opts.trials;
  r.seed = opts.seed;

  // --- construction invariants over free instances, both representations ---
  for (int i = 0; i < opts.trials; ++i) {
    const GeneratedInstance inst =
        generate(derive_seed(opts.seed, static_cast<std::uint64_t>(i)),
                 opts.constraints);

    for (Orientation rep : {Orientation::BGivenA, Orientation::AGivenB}) {
      const TransitionMatrix& m =
          rep == Orientation::BGivenA ? inst.p_ba : inst.p_ab;
      const QLState s = build_state(inst.context, m, rep);

      r.max_born_residual = std::max(r.max_born_residual, born_residuals(s).max());
      r.max_norm_deviation =
          std::max(r.max_norm_deviation, std::abs(norm(s.amp) - 1.0));
      const Expansion ex = expand_in_conjugate_basis(s);
      r.max_expansion_residual = std::max(r.max_expansion_residual, ex.residual);
      r.max_coefficient_deviation =
          std::max(r.max_coefficient_deviation, ex.coefficient_deviation);
      r.max_gram_deviation =
          std::max(r.max_gram_deviation, gram_deviation(conjugate_basis(m)));
      r.max_lambda_antisymmetry =
          std::max(r.max_lambda_antisymmetry,
                   std::abs(s.profile.lambda[0] + s.profile.lambda[1]));
    }

    r.max_unitarity_deviation = std::max(
        r.max_unitarity_deviation, unitarity_deviation(unitary_map(inst.p_ba)));
    const InterferenceProfile prof =
        interference_coefficients(inst.context, inst.p_ba);
    r.max_theta_recovery_error =
        std::max(r.max_theta_recovery_error,
                 std::abs(prof.theta[0] - inst.theta_truth));
  }

  // --- theorem, positive branch: symmetric pairs ---
  GenConstraints sym = opts.constraints;
  sym.symmetric = true;
  sym.min_gap = 0.0;
  for (int i = 0; i < opts.trials; ++i) {
    const GeneratedInstance inst =
        generate(derive_seed(opts.seed ^ 0x706F736974697665ULL,
                             static_cast<std::uint64_t>(i)),
                 sym);
    bool equivalent;
    PhaseMatch match{};
    try {
      const EquivalenceReport rep = theorem_check(inst.context, inst.p_ba, inst.p_ab);
      equivalent = rep.phase_equivalent;
      match = PhaseMatch{rep.phase_equivalent, rep.match_kind, rep.matched_phase,
                         rep.overlap};
    } catch (const TheoremViolation& v) {
      ++r.iff_violations;
      equivalent = v.report().phase_equivalent;
      match = PhaseMatch{v.report().phase_equivalent, v.report().match_kind,
                         v.report().matched_phase, v.report().overlap};
    }
    if (equivalent) ++r.symmetric_equivalent;
    if (match.kind == MatchKind::Direct) ++r.symmetric_direct;
    if (match.kind == MatchKind::Conjugate) ++r.symmetric_conjugate;
    r.min_symmetric_overlap = std::min(r.min_symmetric_overlap, match.overlap);

    for (const auto& [name, value] :
         proof_identity_suite(inst.context, inst.p_ba, inst.p_ab)) {
      auto [it, inserted] = r.max_identity_residuals.try_emplace(name, value);
      if (!inserted) it->second = std::max(it->second, value);
    }
  }

  // --- theorem, negative branch: |p - p'| >= asymmetry_gap ---
  GenConstraints asym = opts.constraints;
  asym.symmetric = false;
  asym.min_gap = opts.asymmetry_gap;
  std::vector<double> overlaps;
  overlaps.reserve(static_cast<std::size_t>(opts.trials));
  for (int i = 0; i < opts.trials; ++i) {
    const GeneratedInstance inst =
        generate(derive_seed(opts.seed ^ 0x6E65676174697665ULL,
                             static_cast<std::uint64_t>(i)),
                 asym);
    double overlap;
    bool equivalent;
    try {
      const EquivalenceReport rep = theorem_check(inst.context, inst.p_ba, inst.p_ab);
      overlap = rep.overlap;
      equivalent = rep.phase_equivalent;
    } catch (const TheoremViolation& v) {
      ++r.iff_violations;
      overlap = v.report().overlap;
      equivalent = v.report().phase_equivalent;
    }
    if (!equivalent) ++r.asymmetric_nonequivalent;
    overlaps.push_back(overlap);
    r.max_asymmetric_overlap = std::max(r.max_asymmetric_overlap, overlap);
  }
  std::sort(overlaps.begin(), overlaps.end());
  r.median_asymmetric_overlap = overlaps[overlaps.size() / 2];

  // --- verdicts ---
  check(r, r.max_born_residual < opts.tol,
        "born residual " + fmt(r.max_born_residual));
  check(r, r.max_norm_deviation < opts.tol,
        "norm deviation " + fmt(r.max_norm_deviation));
  check(r, r.max_expansion_residual < opts.tol,
        "expansion residual " + fmt(r.max_expansion_residual));
  check(r, r.max_coefficient_deviation < opts.tol,
        "expansion coefficient deviation " + fmt(r.max_coefficient_deviation));
  check(r, r.max_gram_deviation < opts.tol,
        "gram deviation " + fmt(r.max_gram_deviation));
  check(r, r.max_unitarity_deviation < opts.tol,
        "unitarity deviation " + fmt(r.max_unitarity_deviation));
  check(r, r.max_lambda_antisymmetry < opts.tol,
        "lambda antisymmetry " + fmt(r.max_lambda_antisymmetry));
  check(r, r.max_theta_recovery_error < opts.tol,
        "theta recovery error " + fmt(r.max_theta_recovery_error));
  check(r, r.symmetric_equivalent == opts.trials,
        "symmetric pairs equivalent in " + std::to_string(r.symmetric_equivalent) +
            "/" + std::to_string(opts.trials) + " trials");
  check(r, r.min_symmetric_overlap >= 1.0 - opts.overlap_tol,
        "min symmetric overlap " + fmt(r.min_symmetric_overlap));
  check(r, r.asymmetric_nonequivalent == opts.trials,
        "asymmetric pairs non-equivalent in " +
            std::to_string(r.asymmetric_nonequivalent) + "/" +
            std::to_string(opts.trials) + " trials");
  check(r, r.median_asymmetric_overlap < 1.0 - 1e-6,
        "median asymmetric overlap " + fmt(r.median_asymmetric_overlap));
  for (const auto& [name, value] : r.max_identity_residuals) {
    check(r, value < opts.tol, name + " residual " + fmt(value));
  }
  return r;
}

}  // namespace qlra
