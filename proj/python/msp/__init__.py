from msp_native import (
    MspError,
    convergence,
    generate,
    girth,
    lift,
    minsum,
    oscillation,
    solve_lp,
    sweep,
    tree_dp,
    uniqueness_margin,
    validate_instance,
)

__all__ = [
    "MspError",
    "convergence",
    "generate",
    "girth",
    "lift",
    "minsum",
    "oscillation",
    "solve_lp",
    "sweep",
    "tree_dp",
    "uniqueness_margin",
    "validate_instance",
]
