"""Spacetime average by direct double integration over one common period.

Midpoint tensor grids on [0, 1] × [t0, t0 + T], starting at 64 × 64 and doubled per
axis each level. Samples at wave-function nodes contribute zero and are counted as
singular cells. Every level is reduced in fixed chunks of x rows, and the chunk sums
are added in chunk order, so results do not depend on the number of workers.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from functools import reduce
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from spacetime_born.averaging.closed_form import born_expectation, dgp_two_state
from spacetime_born.logger import get_logger
from spacetime_born.physics.energy_field import evaluate_field
from spacetime_born.physics.models import UNITS, Superposition, TwoStateSpec

logger = get_logger(__name__)

BASE_CELLS = 64
DEFAULT_MAX_LEVELS = 12
DEFAULT_MIN_LEVELS = 4
CHUNK_SAMPLES = 1 << 20
MIN_REL_TOL = 1e-6
MAX_REL_TOL = 1e-2
# Relative changes below this are rounding noise and count as shrinking
ROUNDOFF_FLOOR = 1e-12
# Synthetic level differences must be integer multiples of pi^2 to this tolerance
COMMENSURATE_TOL = 1e-9


class PeriodSpec(BaseModel):
    """Common period of |psi|^2 and the beat numbers it is built from.

    ``k_set`` holds the pairwise differences (e_j - e_i) / pi^2; T = 2 / (pi gcd(k_set)).
    """

    model_config = ConfigDict(frozen=True)

    period: float = Field(gt=0.0)
    k_set: List[int] = Field(default_factory=list)


class QuadratureReport(BaseModel):
    """Outcome of a refined double integral."""

    value: float = Field(allow_inf_nan=False)
    est_error: float = Field(ge=0.0)
    levels: int = Field(ge=1)
    singular_cells: int = Field(ge=0)
    converged: bool
    history: List[float] = Field(default_factory=list)
    period: float = Field(gt=0.0)


class TwoStateComparison(BaseModel):
    """Closed-form versus numeric spacetime average for one two-state spec."""

    spec: TwoStateSpec
    closed: float
    numeric: float
    agree: bool
    report: QuadratureReport

    @property
    def relative_difference(self) -> float:
        return abs(self.closed - self.numeric) / abs(self.closed)


def _beat_numbers(s: Superposition) -> List[int]:
    levels = s.energy_levels() / UNITS.energy_scale()
    ks = set()
    for i in range(len(levels)):
        for j in range(i + 1, len(levels)):
            diff = abs(levels[j] - levels[i])
            k = int(round(diff))
            if abs(diff - k) > COMMENSURATE_TOL * max(1.0, diff):
                raise ValueError(f"Energies {levels[i]} and {levels[j]} (units of pi^2) are not commensurate")
            if k:
                ks.add(k)
    return sorted(ks)


def common_period(s: Superposition) -> PeriodSpec:
    """
    Least common period of all pairwise beats.

    Each pair beats with period 2 pi / (k pi^2); their least common multiple is
    2 / (pi gcd(k)). A state without beats is time independent and gets T = 2 / pi.

    Args:
        s: Superposition

    Returns:
        Period specification

    Raises:
        ValueError: If synthetic energies are not integer multiples of pi^2 apart
    """
    ks = _beat_numbers(s)
    divisor = reduce(math.gcd, ks) if ks else 1
    return PeriodSpec(period=2.0 / (math.pi * divisor), k_set=ks)


def _level_sum(s: Superposition, cells: int, t0: float, period: float, workers: int) -> Tuple[float, int]:
    xs = (np.arange(cells) + 0.5) / cells
    ts = t0 + (np.arange(cells) + 0.5) * (period / cells)
    rows = max(1, CHUNK_SAMPLES // cells)
    chunks = [xs[start : start + rows] for start in range(0, cells, rows)]

    def chunk_sum(chunk: np.ndarray):
        energy, _ = evaluate_field(s, chunk, ts)
        undefined = np.isnan(energy)
        return float(np.sum(np.where(undefined, 0.0, energy))), int(undefined.sum())

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(chunk_sum, chunks))
    else:
        partials = [chunk_sum(chunk) for chunk in chunks]

    total = float(np.sum(np.array([value for value, _ in partials])))
    return total / (cells * cells), sum(count for _, count in partials)


def dgp_numeric(
    s: Superposition,
    rel_tol: float = 1e-4,
    max_levels: int = DEFAULT_MAX_LEVELS,
    min_levels: int = DEFAULT_MIN_LEVELS,
    t0: float = 0.0,
    workers: int = 1,
) -> QuadratureReport:
    """
    Spacetime average (1/T) ∫∫ Re(E_hat psi / psi) dt dx by refined midpoint grids.

    Refinement stops once at least ``min_levels`` levels are done, the last change
    between consecutive levels is no larger than the one before it, and both are
    below ``rel_tol`` relative to the estimate. ``est_error`` is the larger of those
    two changes.

    Args:
        s: Superposition
        rel_tol: Relative tolerance in [1e-6, 1e-2]
        max_levels: Maximum number of levels
        min_levels: Minimum number of levels before convergence may be declared
        t0: Start of the time window
        workers: Threads used per level

    Returns:
        Quadrature report; ``converged`` is False if ``max_levels`` was exhausted

    Raises:
        ValueError: If a tolerance or level bound is out of range
    """
    if not MIN_REL_TOL <= rel_tol <= MAX_REL_TOL:
        raise ValueError(f"rel_tol must lie in [{MIN_REL_TOL}, {MAX_REL_TOL}], got {rel_tol}")
    if min_levels < 3 or min_levels > max_levels:
        raise ValueError(f"Invalid level bounds: min_levels={min_levels}, max_levels={max_levels}")

    period = common_period(s).period
    history: List[float] = []
    singular = 0

    for level in range(1, max_levels + 1):
        cells = BASE_CELLS * 2 ** (level - 1)
        value, singular = _level_sum(s, cells, t0, period, max(1, workers))
        history.append(value)
        logger.debug(f"Level {level} ({cells}x{cells}): {value!r}, {singular} singular cells")

        if level < 3:
            continue
        last, previous = abs(history[-1] - history[-2]), abs(history[-2] - history[-3])
        change = max(last, previous)
        shrinking = last <= max(previous, ROUNDOFF_FLOOR * abs(history[-1]))
        if level >= min_levels and shrinking and change <= rel_tol * abs(history[-1]):
            return QuadratureReport(
                value=value,
                est_error=change,
                levels=level,
                singular_cells=singular,
                converged=True,
                history=history,
                period=period,
            )

    logger.warning(f"Quadrature not converged after {max_levels} levels (last change {change:.3e})")
    return QuadratureReport(
        value=history[-1],
        est_error=change,
        levels=max_levels,
        singular_cells=singular,
        converged=False,
        history=history,
        period=period,
    )


def time_average_numeric(s: Superposition, x: float, samples: int = 4096, t0: float = 0.0) -> float:
    """
    One-period time average of the pointwise energy at fixed x.

    Node samples contribute zero, as in :func:`dgp_numeric`.

    Args:
        s: Superposition
        x: Position in [0, 1]
        samples: Midpoint samples over the period
        t0: Start of the time window

    Returns:
        Time-averaged energy
    """
    period = common_period(s).period
    ts = t0 + (np.arange(samples) + 0.5) * (period / samples)
    energy, _ = evaluate_field(s, x, ts)
    return float(np.sum(np.where(np.isnan(energy), 0.0, energy)) / samples)


def validate_two_state(
    spec: TwoStateSpec, rel_tol: float = 1e-4, workers: int = 1, max_levels: int = DEFAULT_MAX_LEVELS
) -> TwoStateComparison:
    """
    Cross-check the sign-region integral against the direct double integral.

    Args:
        spec: Two-state specification
        rel_tol: Quadrature tolerance
        workers: Threads used by the quadrature
        max_levels: Quadrature level cap

    Returns:
        Comparison; agree when the relative gap is within max(rel_tol, 3 est_error / |closed|)
    """
    closed = dgp_two_state(spec)
    report = dgp_numeric(spec.superposition(), rel_tol=rel_tol, max_levels=max_levels, workers=workers)
    gap = abs(closed - report.value) / abs(closed)
    allowed = max(rel_tol, 3.0 * report.est_error / abs(closed))
    logger.info(
        f"Validated n1={spec.n1}, n2={spec.n2}, P={spec.p}: closed={closed:.10g}, "
        f"numeric={report.value:.10g}, gap={gap:.2e}"
    )
    return TwoStateComparison(spec=spec, closed=closed, numeric=report.value, agree=gap <= allowed, report=report)


def born_and_numeric(
    s: Superposition, rel_tol: float = 1e-4, workers: int = 1, max_levels: Optional[int] = None
) -> Tuple[float, QuadratureReport]:
    """Born expectation together with the numeric spacetime average."""
    report = dgp_numeric(s, rel_tol=rel_tol, workers=workers, max_levels=max_levels or DEFAULT_MAX_LEVELS)
    return born_expectation(s), report
