"""Age-optimal update scheduling under processing-time constraints."""

from ._core import (
    Branch,
    DistortionKind,
    DistortionSpec,
    Infeasible,
    NonConvergence,
    OracleConfig,
    Schedule,
    Solution,
    check_feasibility,
    distortion_eval,
    min_processing_for,
    oracle_solve,
    proportional_bounds,
    solve,
    solve_constant,
    solve_inverse_age,
    solve_proportional_age,
    sweep_tradeoff,
    total_age,
    tradeoff_preset,
    trajectory,
    trajectory_integral,
    unit_preset,
)

__all__ = [name for name in dir() if not name.startswith("_")]
