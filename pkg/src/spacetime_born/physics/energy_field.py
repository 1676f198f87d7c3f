"""Pointwise energy field E(x, t) = Re(E_hat psi / psi)."""

import math
from typing import Tuple

import numpy as np

from spacetime_born.physics.models import EnergySample, Superposition
from spacetime_born.physics.well import ArrayLike, _check_positions, _mode_matrix, _phase_matrix, _superpose

# Threshold on |psi|^2 (sqrt(2)-normalized eigenfunctions) below which E is undefined
NODE_EPSILON = 1e-12


def evaluate_field(s: Superposition, x: ArrayLike, t: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    """
    Energy field on the outer grid ``x`` × ``t``.

    Args:
        s: Superposition
        x: Positions in [0, 1]
        t: Times

    Returns:
        (energy, psi_sq) arrays of shape (len(x), len(t)); energy is NaN where
        psi_sq < NODE_EPSILON
    """
    _check_positions(x)
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    ts = np.atleast_1d(np.asarray(t, dtype=np.float64))

    weighted = _mode_matrix(s, xs) * s.coefficients
    phases = _phase_matrix(s, ts)
    psi = _superpose(weighted, phases)
    e_psi = _superpose(weighted * s.energy_levels(), phases)

    psi_sq = psi.real**2 + psi.imag**2
    defined = psi_sq >= NODE_EPSILON
    # Re(a / b) = Re(a conj(b)) / |b|^2
    numerator = e_psi.real * psi.real + e_psi.imag * psi.imag
    energy = np.full(psi_sq.shape, np.nan)
    np.divide(numerator, psi_sq, out=energy, where=defined)
    return energy, psi_sq


def pointwise_energy(s: Superposition, x: float, t: float) -> EnergySample:
    """
    Energy beable at one spacetime point.

    Args:
        s: Superposition
        x: Position in [0, 1]
        t: Time

    Returns:
        Sample flagged undefined at wave-function nodes
    """
    energy, psi_sq = evaluate_field(s, x, t)
    value, weight = float(energy[0, 0]), float(psi_sq[0, 0])
    return EnergySample(value=value, defined=weight >= NODE_EPSILON, psi_sq=weight)


def two_state_pointwise(e1: float, e2: float, f: float, g: float, phase: float) -> EnergySample:
    """
    Closed-form two-state energy with phase = (e2 - e1) t.

    Evaluated as (e1 + e2)/2 + (e1 - e2)(f^2 - g^2) / [2 (f^2 + g^2)(1 + a cos(phase))],
    a = 2fg / (f^2 + g^2).

    Args:
        e1: Energy of the f component
        e2: Energy of the g component
        f: First spatial amplitude c1 u1(x)
        g: Second spatial amplitude c2 u2(x)
        phase: Relative phase in radians

    Returns:
        Sample flagged undefined when |psi|^2 < NODE_EPSILON
    """
    norm = f * f + g * g
    if norm == 0.0:
        return EnergySample(value=math.nan, defined=False, psi_sq=0.0)

    a = 2.0 * f * g / norm
    beat = 1.0 + a * math.cos(phase)
    psi_sq = norm * beat
    if beat < NODE_EPSILON / norm:
        return EnergySample(value=math.nan, defined=False, psi_sq=max(psi_sq, 0.0))

    value = 0.5 * (e1 + e2) + (e1 - e2) * (f * f - g * g) / (2.0 * norm * beat)
    return EnergySample(value=value, defined=True, psi_sq=psi_sq)
