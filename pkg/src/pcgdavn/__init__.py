"""Exact verification of deterministic all-versus-nothing Bell proofs from PCG states."""

from .coloring import (Colorable, Pcg, Uncolorable, brute_force_colorable, build_pcg,
                       check_colorable, export_dot, has_odd_red_loop)
from .davn import (DavnReport, lhv_consistent_assignments, success_probability,
                   verify_davn)
from .families import generate
from .hardy import (ConditionSet, HardyCondition, ZeroProbabilityError,
                    conditional_probability, derive_conditions, joint_z_probability,
                    x_product_eigenvalue)
from .state import (Certified, Component, Inconclusive, PcgState, ReducedDensityMatrix,
                    ResidualState, StateValidationError, bipartition_rank,
                    certify_nonstabilizer, outcome_support, project_z, reduced_density,
                    validate_pcg_state)

__all__ = [
    "Certified", "Colorable", "Component", "ConditionSet", "DavnReport", "HardyCondition",
    "Inconclusive", "Pcg", "PcgState", "ReducedDensityMatrix", "ResidualState",
    "StateValidationError", "Uncolorable", "ZeroProbabilityError", "bipartition_rank",
    "brute_force_colorable", "build_pcg", "certify_nonstabilizer", "check_colorable",
    "conditional_probability", "derive_conditions", "export_dot", "generate",
    "has_odd_red_loop", "joint_z_probability", "lhv_consistent_assignments",
    "outcome_support", "project_z", "reduced_density", "success_probability",
    "validate_pcg_state", "verify_davn", "x_product_eigenvalue",
]
