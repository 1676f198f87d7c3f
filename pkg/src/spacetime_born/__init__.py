"""Spacetime Born - spacetime-averaged energy expectation values.

This package computes the spacetime average of the pointwise energy field of
infinite-square-well superpositions, compares it with the Born expectation value,
and tabulates the relative difference across superposition weights.
"""

__version__ = "0.1.0"

# Import key components to make them available at the package level
from .logger import get_logger, log_computation
from .exceptions import ConvergenceError, RootIsolationError, SpacetimeBornError, SweepError

from .physics import (
    UNITS,
    ComplexAmplitude,
    EnergySample,
    Superposition,
    Term,
    TwoStateSpec,
    eigen_energy,
    eigen_function,
    pointwise_energy,
    psi,
)
from .averaging import (
    born_expectation,
    dgp_numeric,
    dgp_two_state,
    find_sign_regions,
    validate_two_state,
)
from .analysis import figure_preset, intersection_report, nstate_trend, sweep_delta

__all__ = [
    # Version info
    "__version__",
    # Utilities
    "get_logger",
    "log_computation",
    # Errors
    "SpacetimeBornError",
    "RootIsolationError",
    "ConvergenceError",
    "SweepError",
    # Physics
    "UNITS",
    "ComplexAmplitude",
    "EnergySample",
    "Superposition",
    "Term",
    "TwoStateSpec",
    "eigen_energy",
    "eigen_function",
    "pointwise_energy",
    "psi",
    # Averaging
    "born_expectation",
    "dgp_numeric",
    "dgp_two_state",
    "find_sign_regions",
    "validate_two_state",
    # Analysis
    "figure_preset",
    "intersection_report",
    "nstate_trend",
    "sweep_delta",
]
