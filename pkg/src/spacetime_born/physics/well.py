"""Infinite square well: eigenvalues, eigenfunctions and wave-function evaluation.

All quantities use the dimensionless convention of :data:`UNITS`
(hbar = 1, 2m = 1, L = 1), so e_n = n^2 pi^2 and omega_n = e_n.
"""

import math
from typing import Union

import numpy as np

from spacetime_born.physics.models import UNITS, ComplexAmplitude, Eigenstate, Superposition

ArrayLike = Union[float, np.ndarray]

SQRT2 = math.sqrt(2.0)


def _eigenstate(n: int) -> Eigenstate:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"Quantum number must be a positive integer, got {n!r}")
    return Eigenstate(n=int(n))


def _check_positions(x: ArrayLike) -> None:
    arr = np.asarray(x, dtype=np.float64)
    if not np.all((arr >= 0.0) & (arr <= UNITS.length)):
        raise ValueError("Positions must lie in [0, 1]")


def eigen_energy(n: int) -> float:
    """
    Energy of the n-th stationary state.

    Args:
        n: Positive quantum number

    Returns:
        n^2 pi^2

    Raises:
        ValueError: If n is not a positive integer
    """
    return _eigenstate(n).energy()


def eigen_function(n: int, x: ArrayLike) -> ArrayLike:
    """
    Real eigenfunction sqrt(2) sin(n pi x).

    Args:
        n: Positive quantum number
        x: Position or array of positions in [0, 1]

    Returns:
        Eigenfunction value(s), same shape as ``x``

    Raises:
        ValueError: If n is invalid or any position lies outside the well
    """
    state = _eigenstate(n)
    _check_positions(x)
    values = SQRT2 * np.sin(state.n * np.pi * np.asarray(x, dtype=np.float64))
    return float(values) if np.ndim(values) == 0 else values


def _mode_matrix(s: Superposition, x: np.ndarray) -> np.ndarray:
    # (len(x), N) table of sqrt(2) sin(n pi x)
    return SQRT2 * np.sin(np.pi * np.outer(x, s.quantum_numbers))


def _phase_matrix(s: Superposition, t: np.ndarray) -> np.ndarray:
    # (N, len(t)) table of exp(-i e_n t)
    return np.exp(-1j * np.outer(s.energy_levels(), t))


def _superpose(weighted: np.ndarray, phases: np.ndarray) -> np.ndarray:
    # Term-by-term accumulation keeps the summation order fixed
    total = np.zeros((weighted.shape[0], phases.shape[1]), dtype=np.complex128)
    for k in range(weighted.shape[1]):
        total += weighted[:, k, None] * phases[None, k, :]
    return total


def psi_values(s: Superposition, x: ArrayLike, t: ArrayLike) -> np.ndarray:
    """
    Wave function on the outer grid ``x`` × ``t``.

    Args:
        s: Superposition
        x: Positions in [0, 1]
        t: Times

    Returns:
        Complex array of shape (len(x), len(t))
    """
    _check_positions(x)
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    ts = np.atleast_1d(np.asarray(t, dtype=np.float64))
    return _superpose(_mode_matrix(s, xs) * s.coefficients, _phase_matrix(s, ts))


def psi(s: Superposition, x: float, t: float) -> ComplexAmplitude:
    """
    Evaluate sum_n c_n exp(-i e_n t) sqrt(2) sin(n pi x) at one point.

    Args:
        s: Superposition
        x: Position in [0, 1]
        t: Finite time

    Returns:
        Complex amplitude

    Raises:
        ValueError: If x is outside the well or t is not finite
    """
    if not math.isfinite(t):
        raise ValueError(f"Time must be finite, got {t}")
    value = complex(psi_values(s, x, t)[0, 0])
    return ComplexAmplitude(re=value.real, im=value.imag)
