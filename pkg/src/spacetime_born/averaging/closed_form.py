"""Exact two-state pipeline.

The time average of the two-state energy is piecewise constant in x,

    E_bar(x) = (e1 + e2)/2 + (e1 - e2)/2 * sgn(f^2 - g^2),

so the spacetime average reduces to measuring where f^2 > g^2. With d = gcd(n1, n2)
and n_i = d m_i, the dominance function h = P sin^2(n1 pi x) - (1 - P) sin^2(n2 pi x)
repeats the pattern of the coprime pair (m1, m2) on each cell of width 1/d. For the
coprime pair sin(m pi x) = sin(pi x) U_{m-1}(cos pi x), hence

    h = sin^2(pi x) Q-(c) Q+(c),    Q±(c) = sqrt(P) U_{m1-1}(c) ± sqrt(1 - P) U_{m2-1}(c),

with c = cos(pi x). Crossings are the roots of Q± inside (-1, 1): eigenvalues of the
Chebyshev colleague matrix, polished by bisection in x and checked against a dense
sign scan.
"""

import math
from fractions import Fraction
from typing import List, Tuple

import numpy as np
from numpy.polynomial import chebyshev
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.optimize import bisect

from spacetime_born.exceptions import RootIsolationError
from spacetime_born.logger import get_logger
from spacetime_born.physics.models import Superposition, TwoStateSpec
from spacetime_born.physics.well import ArrayLike, _check_positions

logger = get_logger(__name__)

CROSSING_XTOL = 1e-14
# Eigenvalues further off the real axis belong to complex pairs
IMAG_TOL = 1e-6
# Bracket half-widths tried around each candidate root
POLISH_STEPS = (1e-13, 1e-11, 1e-9, 1e-7, 1e-6)
# cos(pi x) cannot resolve a sign of Q this close to a wall
WALL_GUARD = 1e-7
# Polished roots closer than this are one root
DUPLICATE_TOL = 1e-12
CHECK_CELLS_PER_MODE = 256
# |Q| below this at a check node counts as a zero, not a sign
ZERO_TOL = 1e-12
# Check nodes this close to an isolated root are skipped
ROOT_GUARD = 1e-9
LABEL_PROBES = np.array([(3.0 - math.sqrt(3.0)) / 6.0, 0.5, (3.0 + math.sqrt(3.0)) / 6.0])


class SignRegions(BaseModel):
    """Partition of [0, 1] by the sign of f^2 - g^2.

    ``labels[i]`` is the sign on the open interval between consecutive entries of
    ``[0] + crossings + [1]``.
    """

    model_config = ConfigDict(frozen=True)

    crossings: List[float] = Field(default_factory=list)
    labels: List[int] = Field(min_length=1)

    @model_validator(mode="after")
    def _consistent(self) -> "SignRegions":
        if len(self.labels) != len(self.crossings) + 1:
            raise ValueError("Need exactly one label per interval")
        if any(label not in (-1, 0, 1) for label in self.labels):
            raise ValueError("Labels must be -1, 0 or +1")
        edges = [0.0] + list(self.crossings) + [1.0]
        if any(b <= a for a, b in zip(edges, edges[1:])):
            raise ValueError("Crossings must be strictly increasing inside (0, 1)")
        return self

    @property
    def edges(self) -> List[float]:
        return [0.0] + list(self.crossings) + [1.0]

    def lengths(self) -> List[float]:
        edges = self.edges
        return [b - a for a, b in zip(edges, edges[1:])]

    def fractions(self) -> Tuple[float, float]:
        """Return (fraction where f^2 > g^2, fraction where g^2 > f^2)."""
        lengths = self.lengths()
        f_dominant = math.fsum(length for length, label in zip(lengths, self.labels) if label > 0)
        g_dominant = math.fsum(length for length, label in zip(lengths, self.labels) if label < 0)
        return f_dominant, g_dominant

    def signed_measure(self) -> float:
        """Integral of sgn(f^2 - g^2) over the well."""
        return math.fsum(label * length for label, length in zip(self.labels, self.lengths()))


def time_average_two_state(e1: float, e2: float, f: float, g: float) -> float:
    """
    One-period time average of the two-state pointwise energy at fixed x.

    Args:
        e1: Energy of the f component
        e2: Energy of the g component
        f: First spatial amplitude
        g: Second spatial amplitude

    Returns:
        (e1 + e2)/2 + (e1 - e2)/2 * sgn(f^2 - g^2)

    Raises:
        ValueError: If f = g = 0 (the wave function vanishes for the whole period)
    """
    if f == 0.0 and g == 0.0:
        raise ValueError("Time average undefined where f = g = 0")
    sign = float(np.sign(f * f - g * g))
    return 0.5 * (e1 + e2) + 0.5 * (e1 - e2) * sign


def time_averaged_profile(spec: TwoStateSpec, x: ArrayLike) -> np.ndarray:
    """
    Time-averaged energy profile E_bar(x) on an array of positions.

    Positions where both amplitudes vanish get NaN.

    Args:
        spec: Two-state specification
        x: Positions in [0, 1]

    Returns:
        Array of time-averaged energies
    """
    _check_positions(x)
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    e1, e2 = spec.energy_pair()
    f = spec.c1 * math.sqrt(2.0) * np.sin(spec.n1 * np.pi * xs)
    g = spec.c2 * math.sqrt(2.0) * np.sin(spec.n2 * np.pi * xs)
    profile = 0.5 * (e1 + e2) + 0.5 * (e1 - e2) * np.sign(f * f - g * g)
    profile[(f == 0.0) & (g == 0.0)] = np.nan
    return profile


def _u_series(k: int) -> np.ndarray:
    """Chebyshev T coefficients of U_k = 2 (T_k + T_{k-2} + ...), with a single T_0."""
    coef = np.zeros(k + 1)
    coef[k::-2] = 2.0
    if k % 2 == 0:
        coef[0] = 1.0
    return coef


def _factor_series(m1: int, m2: int, p: float, sign: float) -> np.ndarray:
    a, b = math.sqrt(p), math.sqrt(1.0 - p)
    return chebyshev.chebadd(a * _u_series(m1 - 1), sign * b * _u_series(m2 - 1))


def _in_x(series: np.ndarray):
    def q(x):
        return chebyshev.chebval(np.cos(np.pi * x), series)

    return q


def _dedupe(roots: List[float]) -> List[float]:
    kept: List[float] = []
    for root in sorted(roots):
        if not kept or root - kept[-1] > DUPLICATE_TOL:
            kept.append(root)
    return kept


def _polish(q, x0: float) -> List[float]:
    """Roots of ``q`` bracketed around the candidate ``x0``; empty for a complex pair."""
    mid = np.sign(q(x0))
    if mid == 0:
        return [x0]
    for delta in POLISH_STEPS:
        lo, hi = max(x0 - delta, WALL_GUARD), min(x0 + delta, 1.0 - WALL_GUARD)
        roots = []
        if np.sign(q(lo)) * mid < 0:
            roots.append(bisect(q, lo, x0, xtol=CROSSING_XTOL))
        if np.sign(q(hi)) * mid < 0:
            roots.append(bisect(q, x0, hi, xtol=CROSSING_XTOL))
        if roots:
            return roots
    return []


def _factor_roots(series: np.ndarray) -> List[float]:
    """Roots in x of one factor Q(cos pi x), away from the walls."""
    try:
        eigenvalues = np.asarray(chebyshev.chebroots(series), dtype=np.complex128)
    except np.linalg.LinAlgError as e:
        raise RootIsolationError(f"Colleague matrix eigenvalues failed: {e}") from e
    if not np.all(np.isfinite(eigenvalues)):
        raise RootIsolationError("Colleague matrix produced non-finite eigenvalues")

    near_real = eigenvalues[np.abs(eigenvalues.imag) <= IMAG_TOL].real
    candidates = np.arccos(np.clip(near_real, -1.0, 1.0)) / np.pi
    q = _in_x(series)
    return _dedupe(
        [root for x0 in candidates if WALL_GUARD < x0 < 1.0 - WALL_GUARD for root in _polish(q, float(x0))]
    )


def _missed_sign_change(series: np.ndarray, roots: List[float], cells: int) -> bool:
    """Whether Q changes sign between two check nodes with no isolated root between them."""
    nodes = np.arange(1, cells) / cells
    nodes = nodes[(nodes > WALL_GUARD) & (nodes < 1.0 - WALL_GUARD)]
    values = _in_x(series)(nodes)
    known = np.asarray(roots, dtype=np.float64)

    slot = np.searchsorted(known, nodes)
    if known.size:
        below = known[np.clip(slot - 1, 0, known.size - 1)]
        above = known[np.clip(slot, 0, known.size - 1)]
        distance = np.minimum(np.abs(nodes - below), np.abs(above - nodes))
    else:
        distance = np.full(nodes.shape, np.inf)

    keep = (np.abs(values) >= ZERO_TOL) & (distance > ROOT_GUARD)
    slot, signs = slot[keep], np.sign(values[keep])
    return bool(np.any((slot[1:] == slot[:-1]) & (signs[1:] != signs[:-1])))


def _coprime_regions(spec: TwoStateSpec, m1: int, m2: int) -> Tuple[List[float], List[int]]:
    factors = [_factor_series(m1, m2, spec.p, sign) for sign in (-1.0, 1.0)]
    cells = CHECK_CELLS_PER_MODE * max(m1, m2)

    roots: List[float] = []
    for series in factors:
        found = _factor_roots(series)
        if _missed_sign_change(series, found, cells):
            raise RootIsolationError(
                f"Crossings of n1={spec.n1}, n2={spec.n2}, P={spec.p} not isolated: "
                f"sign change without a root on a {cells}-cell check grid"
            )
        roots.extend(found)
    candidates = _dedupe(roots)
    logger.debug(f"{len(candidates)} candidate crossings for m1={m1}, m2={m2}, P={spec.p}")

    # Label each interval by sign(Q- Q+) at the strongest of three interior probes
    edges = np.array([0.0] + candidates + [1.0])
    left, width = edges[:-1], np.diff(edges)
    c = np.cos(np.pi * (left[:, None] + width[:, None] * LABEL_PROBES[None, :]))
    values = chebyshev.chebval(c, factors[0]) * chebyshev.chebval(c, factors[1])
    strongest = np.argmax(np.abs(values), axis=1)
    interval_signs = np.sign(values[np.arange(len(left)), strongest]).astype(int)

    crossings: List[float] = []
    labels = [int(interval_signs[0])]
    for crossing, sign in zip(candidates, interval_signs[1:]):
        if sign != labels[-1]:
            crossings.append(crossing)
            labels.append(int(sign))
    return crossings, labels


def find_sign_regions(spec: TwoStateSpec) -> SignRegions:
    """
    Isolate the sign changes of P sin^2(n1 pi x) - (1 - P) sin^2(n2 pi x) on (0, 1).

    The pattern of the coprime pair (n1, n2) / gcd is found once and repeated on every
    periodicity cell. Touch points without a sign change are not crossings.

    Args:
        spec: Two-state specification

    Returns:
        Sign regions with crossings located to 1e-14

    Raises:
        RootIsolationError: If the eigenvalue solve fails or the check grid shows a
            sign change no isolated root accounts for
    """
    if spec.p == 1.0:
        return SignRegions(crossings=[], labels=[1])
    if spec.p == 0.0:
        return SignRegions(crossings=[], labels=[-1])

    d = math.gcd(spec.n1, spec.n2)
    cell_crossings, cell_labels = _coprime_regions(spec, spec.n1 // d, spec.n2 // d)

    crossings: List[float] = []
    labels = [cell_labels[0]]
    for k in range(d):
        boundaries = [(float(k), cell_labels[0])] if k else []
        boundaries += list(zip((k + x for x in cell_crossings), cell_labels[1:]))
        for position, label in boundaries:
            if label != labels[-1]:
                crossings.append(position / d)
                labels.append(label)
    return SignRegions(crossings=crossings, labels=labels)


def dgp_two_state(spec: TwoStateSpec) -> float:
    """
    Spacetime-averaged energy of a two-state superposition.

    Args:
        spec: Two-state specification

    Returns:
        e1 * (fraction f^2 > g^2) + e2 * (fraction g^2 > f^2), intervals with
        f^2 = g^2 weighted by (e1 + e2)/2

    Raises:
        RootIsolationError: If sign-region isolation fails
    """
    e1, e2 = spec.energy_pair()
    regions = find_sign_regions(spec)
    return 0.5 * (e1 + e2) + 0.5 * (e1 - e2) * regions.signed_measure()


def born_expectation(s: Superposition) -> float:
    """
    Born-rule energy expectation sum c_n^2 e_n / sum c_n^2.

    Args:
        s: Superposition (normalization not required)

    Returns:
        Expectation value

    Raises:
        ValueError: If every coefficient is zero
    """
    weights = s.coefficients**2
    total = weights.sum()
    if total == 0.0:
        raise ValueError("Born expectation needs a nonzero coefficient")
    return float(np.dot(weights, s.energy_levels()) / total)


def intersection_count(spec: TwoStateSpec) -> Tuple[int, Fraction]:
    """
    Count sign-changing intersections of f^2 and g^2.

    Args:
        spec: Two-state specification

    Returns:
        (total crossings in (0, 1), crossings per periodicity cell 1/gcd(n1, n2))

    Raises:
        RootIsolationError: If sign-region isolation fails
    """
    total = len(find_sign_regions(spec).crossings)
    return total, Fraction(total, math.gcd(spec.n1, spec.n2))
