"""Reconstruction of complex probability amplitudes from two-observable
probabilistic data, in both conditioning orders, with unitary-equivalence
checks between the two representations.

The heavy lifting lives in the compiled extension ``qlra._core``; this
package re-exports its public surface.
"""

from ._core import (  # noqa: F401
    RNG_ALGORITHM,
    Basis,
    BornResiduals,
    ContextData,
    CountTable,
    EmpiricalEstimate,
    EmpiricalRun,
    EquivalenceReport,
    Expansion,
    GenConstraints,
    GeneratedInstance,
    InterferenceProfile,
    PhaseMatch,
    QlraError,
    QLState,
    TransitionMatrix,
    UnitaryMap,
    VerifyOptions,
    VerifyResult,
    __version__,
    apply_unitary,
    born_residuals,
    build_state,
    classical_ftp,
    conjugate_basis,
    derive_seed,
    empirical_pipeline,
    estimate_from_counts,
    expand_in_conjugate_basis,
    generate,
    gram_deviation,
    interference_coefficients,
    phase_equivalent,
    phase_equivalent_amp,
    proof_identity_suite,
    run_verification,
    simulate_counts,
    theorem_check,
    transition_from_parameter,
    unitarity_deviation,
    unitary_map,
    validate_context,
    validate_transition,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
