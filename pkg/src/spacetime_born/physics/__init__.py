"""Square-well physics: state models, wave functions and the pointwise energy field."""

from spacetime_born.physics.models import (
    UNITS,
    ComplexAmplitude,
    Eigenstate,
    EnergySample,
    Superposition,
    Term,
    TwoStateSpec,
    UnitConvention,
)
from spacetime_born.physics.well import eigen_energy, eigen_function, psi, psi_values
from spacetime_born.physics.energy_field import (
    NODE_EPSILON,
    evaluate_field,
    pointwise_energy,
    two_state_pointwise,
)

__all__ = [
    "UNITS",
    "UnitConvention",
    "Eigenstate",
    "Term",
    "Superposition",
    "ComplexAmplitude",
    "EnergySample",
    "TwoStateSpec",
    "eigen_energy",
    "eigen_function",
    "psi",
    "psi_values",
    "NODE_EPSILON",
    "evaluate_field",
    "pointwise_energy",
    "two_state_pointwise",
]
