"""Delta(P) analysis: sweeps, figure presets, N-state trends."""

from spacetime_born.analysis.models import IntersectionRow, SweepResult, SweepRow, TrendRow
from spacetime_born.analysis.sweeps import (
    FIGURE_PRESETS,
    default_grid,
    delta_percent,
    equal_weight_superposition,
    figure_preset,
    intersection_report,
    intersection_row,
    magnitude_summary,
    nstate_trend,
    sweep_delta,
    trend_row,
)

__all__ = [
    "IntersectionRow",
    "SweepResult",
    "SweepRow",
    "TrendRow",
    "FIGURE_PRESETS",
    "default_grid",
    "delta_percent",
    "equal_weight_superposition",
    "figure_preset",
    "intersection_report",
    "intersection_row",
    "magnitude_summary",
    "nstate_trend",
    "sweep_delta",
    "trend_row",
]
