"""Finite quantum oscillator and Lie-algebra toolkit."""

from finq._core import (
    ValidationError,
    ResourceError,
    StructuralError,
    DiagnosticError,
    angular_momentum,
    canonical_level,
    classify_regime,
    clifford_generators,
    commutator,
    commutator_table,
    derive_constants,
    dynamical_rep_summary,
    flexed_killing,
    hard_spectrum_pt,
    hermitian_eigensystem,
    jacobi_constraint_chain,
    medium_spectrum,
    oscillator_hamiltonian,
    partition_function,
    rep_report,
    soft_spectrum_pt,
    stationary_rep,
    time_spectrum_profile,
    uncertainty_report,
    variational_ground_bound,
    __version__,
)

__all__ = [
    "ValidationError",
    "ResourceError",
    "StructuralError",
    "DiagnosticError",
    "angular_momentum",
    "canonical_level",
    "classify_regime",
    "clifford_generators",
    "commutator",
    "commutator_table",
    "derive_constants",
    "dynamical_rep_summary",
    "flexed_killing",
    "hard_spectrum_pt",
    "hermitian_eigensystem",
    "jacobi_constraint_chain",
    "medium_spectrum",
    "oscillator_hamiltonian",
    "partition_function",
    "rep_report",
    "soft_spectrum_pt",
    "stationary_rep",
    "time_spectrum_profile",
    "uncertainty_report",
    "variational_ground_bound",
    "__version__",
]
