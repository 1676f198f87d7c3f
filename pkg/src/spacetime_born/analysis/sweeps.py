"""Delta(P) sweeps, figure presets, N-state trends and intersection reports."""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from spacetime_born.analysis.models import (
    IntersectionRow,
    SweepResult,
    SweepRow,
    TrendRow,
    percent_difference,
)
from spacetime_born.averaging.closed_form import born_expectation, dgp_two_state, intersection_count
from spacetime_born.averaging.quadrature import DEFAULT_MAX_LEVELS, born_and_numeric
from spacetime_born.exceptions import SpacetimeBornError, SweepError
from spacetime_born.logger import get_logger
from spacetime_born.physics.models import Superposition, TwoStateSpec

logger = get_logger(__name__)

DEFAULT_GRID_POINTS = 201
MAX_TREND_STATES = 6

FIGURE_PRESETS: Dict[str, Tuple[int, int]] = {
    "fig1": (1, 2),
    "fig2": (3, 8),
    "fig3": (13, 25),
    "fig4": (17, 23),
    "fig5": (42, 43),
}


def default_grid(points: int = DEFAULT_GRID_POINTS) -> np.ndarray:
    """Uniform P grid on [0, 1] including both endpoints."""
    if points < 2:
        raise ValueError(f"A P grid needs at least 2 points, got {points}")
    return np.linspace(0.0, 1.0, points)


def delta_percent(born: float, dgp: float) -> float:
    """
    Relative difference between the Born and spacetime-averaged expectations.

    Args:
        born: Born expectation value
        dgp: Spacetime-averaged expectation value

    Returns:
        (born - dgp) / dgp * 100

    Raises:
        ValueError: If dgp is zero
    """
    return percent_difference(born, dgp)


def _sweep_row(n1: int, n2: int, p: float) -> SweepRow:
    spec = TwoStateSpec(n1=n1, n2=n2, p=p)
    try:
        dgp = dgp_two_state(spec)
    except SpacetimeBornError as exc:
        raise SweepError(f"Sweep ({n1}, {n2}) failed at P={p}: {exc}", p=p) from exc
    born = born_expectation(spec.superposition())
    return SweepRow(p=p, born=born, dgp=dgp, delta_percent=delta_percent(born, dgp))


def sweep_delta(n1: int, n2: int, p_grid: Optional[Sequence[float]] = None, workers: int = 1) -> SweepResult:
    """
    Delta(P) for a two-state pair over a grid of P values.

    Args:
        n1: First quantum number
        n2: Second quantum number
        p_grid: Strictly increasing P values in [0, 1] (default: 201 uniform points)
        workers: Threads used to evaluate rows; row order follows the grid

    Returns:
        Sweep table

    Raises:
        ValueError: If the pair or grid is invalid
        SweepError: If a row fails, with the offending P attached
    """
    grid = [float(p) for p in (default_grid() if p_grid is None else p_grid)]
    if not grid:
        raise ValueError("P grid is empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("P grid must be strictly increasing")
    if grid[0] < 0.0 or grid[-1] > 1.0:
        raise ValueError("P values must lie in [0, 1]")
    TwoStateSpec(n1=n1, n2=n2, p=grid[0])

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda p: _sweep_row(n1, n2, p), grid))
    else:
        rows = [_sweep_row(n1, n2, p) for p in grid]

    logger.debug(f"Swept ({n1}, {n2}) over {len(grid)} P values")
    return SweepResult(n1=n1, n2=n2, rows=rows)


def figure_preset(name: str, points: int = DEFAULT_GRID_POINTS, workers: int = 1) -> SweepResult:
    """
    Sweep for one of the published figure pairs.

    Args:
        name: One of fig1 ... fig5
        points: Number of uniform P values
        workers: Threads used to evaluate rows

    Returns:
        Sweep table

    Raises:
        ValueError: If the preset name is unknown
    """
    if name not in FIGURE_PRESETS:
        raise ValueError(f"Unknown figure preset: {name!r} (expected one of {sorted(FIGURE_PRESETS)})")
    n1, n2 = FIGURE_PRESETS[name]
    return sweep_delta(n1, n2, default_grid(points), workers=workers)


def magnitude_summary(result: SweepResult) -> Tuple[float, float]:
    """
    Largest |Delta| of a sweep and the first P attaining it.

    Args:
        result: Sweep table

    Returns:
        (max |Delta| in percent, argmax P)
    """
    magnitudes = np.abs(np.array(result.deltas))
    index = int(np.argmax(magnitudes))
    return float(magnitudes[index]), result.rows[index].p


def trend_row(
    s: Superposition, rel_tol: float = 1e-4, workers: int = 1, max_levels: int = DEFAULT_MAX_LEVELS
) -> TrendRow:
    """
    Delta for an arbitrary superposition through the numeric spacetime average.

    Args:
        s: Superposition with at least two terms
        rel_tol: Quadrature tolerance
        workers: Quadrature threads
        max_levels: Quadrature level cap

    Returns:
        Trend row; ``converged`` mirrors the quadrature report
    """
    born, report = born_and_numeric(s, rel_tol=rel_tol, workers=workers, max_levels=max_levels)
    per_cell = None
    if len(s.terms) == 2 and s.energies is None:
        (n1, c1), (n2, c2) = [(term.n, term.c) for term in s.terms]
        p = c1 * c1 / (c1 * c1 + c2 * c2)
        if 0.0 < p < 1.0:
            per_cell = intersection_count(TwoStateSpec(n1=n1, n2=n2, p=p))[1]
    if not report.converged:
        logger.warning(f"Trend row for N={len(s.terms)} carries an unconverged quadrature estimate")
    return TrendRow(
        n_states=len(s.terms),
        born=born,
        dgp=report.value,
        delta_percent=delta_percent(born, report.value),
        est_error=report.est_error,
        converged=report.converged,
        levels=report.levels,
        intersections_per_cell=per_cell,
    )


def equal_weight_superposition(n_states: int) -> Superposition:
    """First ``n_states`` eigenstates with c_n = 1 / sqrt(N)."""
    weight = 1.0 / math.sqrt(n_states)
    return Superposition.from_pairs([(n, weight) for n in range(1, n_states + 1)])


def nstate_trend(
    n_max: int,
    weighting: str = "equal",
    rel_tol: float = 1e-4,
    workers: int = 1,
    max_levels: int = DEFAULT_MAX_LEVELS,
) -> List[TrendRow]:
    """
    Delta for equal-weight superpositions of the first N states, N = 2 ... n_max.

    The table is a diagnostic; no monotonicity is imposed.

    Args:
        n_max: Largest N, between 2 and 6
        weighting: Coefficient scheme; only "equal" is supported
        rel_tol: Quadrature tolerance
        workers: Quadrature threads
        max_levels: Quadrature level cap

    Returns:
        One row per N

    Raises:
        ValueError: If n_max or weighting is unsupported
    """
    if weighting != "equal":
        raise ValueError(f"Unsupported weighting: {weighting!r}")
    if not 2 <= n_max <= MAX_TREND_STATES:
        raise ValueError(f"n_max must lie in [2, {MAX_TREND_STATES}], got {n_max}")

    rows = []
    for n_states in range(2, n_max + 1):
        row = trend_row(equal_weight_superposition(n_states), rel_tol=rel_tol, workers=workers, max_levels=max_levels)
        logger.info(f"N={n_states}: Delta={row.delta_percent:.4f}% (converged={row.converged})")
        rows.append(row)
    return rows


def intersection_row(name: str, result: SweepResult, p: float = 0.5) -> IntersectionRow:
    """
    Crossings per periodicity cell of a swept pair next to its peak |Delta|.

    Args:
        name: Label for the row
        result: Sweep of the pair
        p: P at which crossings are counted

    Returns:
        Intersection row
    """
    n1, n2 = result.n1, result.n2
    total, per_cell = intersection_count(TwoStateSpec(n1=n1, n2=n2, p=p))
    divisor = math.gcd(n1, n2)
    peak, argmax_p = magnitude_summary(result)
    return IntersectionRow(
        name=name,
        n1=n1,
        n2=n2,
        reduced=(n1 // divisor, n2 // divisor),
        gcd=divisor,
        crossings=total,
        crossings_per_cell=per_cell,
        max_abs_delta=peak,
        argmax_p=argmax_p,
    )


def intersection_report(
    names: Optional[Iterable[str]] = None, p: float = 0.5, points: int = DEFAULT_GRID_POINTS
) -> List[IntersectionRow]:
    """
    Crossings per periodicity cell next to the peak |Delta| of each figure preset.

    The correlation between the two columns is reported, not asserted.

    Args:
        names: Preset names (default: all five)
        p: P at which crossings are counted
        points: Sweep resolution for the peak |Delta|

    Returns:
        One row per preset, in the order given
    """
    return [intersection_row(name, figure_preset(name, points), p) for name in names or FIGURE_PRESETS]
