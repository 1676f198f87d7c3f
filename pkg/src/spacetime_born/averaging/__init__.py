"""Spacetime averaging of the pointwise energy.

``closed_form`` integrates the exact two-state time average over its sign regions;
``quadrature`` integrates the field directly over one common period for any number
of states.
"""

from spacetime_born.averaging.closed_form import (
    SignRegions,
    born_expectation,
    dgp_two_state,
    find_sign_regions,
    intersection_count,
    time_average_two_state,
    time_averaged_profile,
)
from spacetime_born.averaging.quadrature import (
    PeriodSpec,
    QuadratureReport,
    TwoStateComparison,
    common_period,
    dgp_numeric,
    time_average_numeric,
    validate_two_state,
)

__all__ = [
    "SignRegions",
    "born_expectation",
    "dgp_two_state",
    "find_sign_regions",
    "intersection_count",
    "time_average_two_state",
    "time_averaged_profile",
    "PeriodSpec",
    "QuadratureReport",
    "TwoStateComparison",
    "common_period",
    "dgp_numeric",
    "time_average_numeric",
    "validate_two_state",
]
