"""Numerical failure types.

Precondition violations raise ``ValueError``; the classes below mark failures of
the numerics themselves.
"""

from typing import Optional


class SpacetimeBornError(Exception):
    """Base class for numerical failures."""


class RootIsolationError(SpacetimeBornError):
    """Crossing count did not stabilise under scan-grid refinement."""


class ConvergenceError(SpacetimeBornError):
    """Quadrature did not reach the requested tolerance."""


class SweepError(SpacetimeBornError):
    """A sweep row failed; carries the P value of the row."""

    def __init__(self, message: str, p: Optional[float] = None):
        super().__init__(message)
        self.p = p
