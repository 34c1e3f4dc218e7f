"""Level-wise toolkit for linear stationary fuzzy difference inclusions.

Fuzzy quantities are finite stacks of nested alpha-cut intervals; the
induced interval dynamics are analyzed with sufficient stability
criteria, and for non-negative systems the exact per-level solution
envelope is computed, with Monte Carlo oracles for validation.
"""

from .fuzzy_num import (
    FuzzyNumber,
    FuzzyVector,
    StackingViolation,
    Tfn,
    as_fuzzy,
    fn_add,
    fn_mul_approx,
    fn_scale,
    fuzzy_from_json,
    fuzzy_to_json,
    tfn_alpha_cut,
    validate_nested,
)
from .metrics import (
    Box,
    d_fuzzy_vec,
    d_levelwise,
    d_membership,
    dist_rn,
    hausdorff_box,
    hausdorff_interval,
)
from .interval_linalg import (
    IntervalMatrix,
    IntervalVector,
    MidRad,
    VertexBudgetError,
    gershgorin_rows,
    interval_matvec,
    matpow_envelope_nonneg,
    mid_rad,
    sample_matrix,
    sample_vector,
    vertex_count,
    vertex_matrices,
)
from .stability import (
    EigenBox,
    StabilityStatus,
    StabilityVerdict,
    analyze,
    condeig_check,
    eigen_box_bounds,
    eigen_box_rayleigh,
    gershgorin_nonneg_test,
    gershgorin_nonpos_test,
    marginal_test,
    sampled_falsifier,
    spectral_radii,
    spectral_radius,
)
from .fdi_sim import (
    EnvelopeTrajectory,
    FuzzyAttainable,
    FuzzySystem,
    SignPreconditionError,
    assemble_fuzzy_attainable,
    envelope_propagate,
    level_matrix,
    level_state,
    mc_trajectories,
    transition_envelope,
)

__version__ = "0.1.0"

__all__ = [
    "Box",
    "EigenBox",
    "EnvelopeTrajectory",
    "FuzzyAttainable",
    "FuzzyNumber",
    "FuzzySystem",
    "FuzzyVector",
    "IntervalMatrix",
    "IntervalVector",
    "MidRad",
    "SignPreconditionError",
    "StabilityStatus",
    "StabilityVerdict",
    "StackingViolation",
    "Tfn",
    "VertexBudgetError",
    "analyze",
    "as_fuzzy",
    "assemble_fuzzy_attainable",
    "condeig_check",
    "d_fuzzy_vec",
    "d_levelwise",
    "d_membership",
    "dist_rn",
    "eigen_box_bounds",
    "eigen_box_rayleigh",
    "envelope_propagate",
    "fn_add",
    "fn_mul_approx",
    "fn_scale",
    "fuzzy_from_json",
    "fuzzy_to_json",
    "gershgorin_nonneg_test",
    "gershgorin_nonpos_test",
    "gershgorin_rows",
    "hausdorff_box",
    "hausdorff_interval",
    "interval_matvec",
    "level_matrix",
    "level_state",
    "marginal_test",
    "matpow_envelope_nonneg",
    "mc_trajectories",
    "mid_rad",
    "sample_matrix",
    "sample_vector",
    "sampled_falsifier",
    "spectral_radii",
    "spectral_radius",
    "tfn_alpha_cut",
    "transition_envelope",
    "validate_nested",
    "vertex_count",
    "vertex_matrices",
]
