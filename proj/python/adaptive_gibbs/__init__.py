"""Adaptive random scan Gibbs samplers: exact kernels, ergodicity
bounds, the transient counter-example and the Poisson random-effects
example, backed by the C++ core."""

from ._core import (
    AdaptSpeed,
    AdgibbsError,
    GlmmSummary,
    LinearSpeed,
    MinorizationCertificate,
    SelectionProbs,
    StairSchedule,
    drift_exponent_select,
    drift_rate_r,
    geometric_metropolis_row,
    geometric_p_gap_lower,
    geometric_q_gap,
    geometric_qn_pmf,
    geometric_truncation,
    glmm_run,
    hoeffding_tail,
    kernel_lipschitz_bound,
    mixture_coefficient,
    project_to_simplex,
    run_bound_suite,
    simulate_stair_final,
    stair_alpha,
    stair_kernel_row,
    stair_pi_weight,
    stair_row_dominates_walk,
    strong_unif_upgrade,
    sup_distance,
    systematic_minorization,
    truncated_tv_curve,
    tv_finite,
    uniform_bound,
    validate_selection_probs,
)

__all__ = [
    "AdaptSpeed",
    "AdgibbsError",
    "GlmmSummary",
    "LinearSpeed",
    "MinorizationCertificate",
    "SelectionProbs",
    "StairSchedule",
    "drift_exponent_select",
    "drift_rate_r",
    "geometric_metropolis_row",
    "geometric_p_gap_lower",
    "geometric_q_gap",
    "geometric_qn_pmf",
    "geometric_truncation",
    "glmm_run",
    "hoeffding_tail",
    "kernel_lipschitz_bound",
    "mixture_coefficient",
    "project_to_simplex",
    "run_bound_suite",
    "simulate_stair_final",
    "stair_alpha",
    "stair_kernel_row",
    "stair_pi_weight",
    "stair_row_dominates_walk",
    "strong_unif_upgrade",
    "sup_distance",
    "systematic_minorization",
    "truncated_tv_curve",
    "tv_finite",
    "uniform_bound",
    "validate_selection_probs",
]
