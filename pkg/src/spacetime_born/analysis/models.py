"""Models for sweep tables and trend reports."""

from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

# Tolerance for recomputing delta_percent from the stored expectation values
DELTA_CLOSURE_TOL = 1e-9


def percent_difference(born: float, dgp: float) -> float:
    """(born - dgp) / dgp in percent."""
    if dgp == 0.0:
        raise ValueError("Relative difference undefined for a zero spacetime average")
    return (born - dgp) / dgp * 100.0


class SweepRow(BaseModel):
    """One P value of a two-state sweep."""

    model_config = ConfigDict(frozen=True)

    p: float = Field(ge=0.0, le=1.0)
    born: float
    dgp: float
    delta_percent: float


class SweepResult(BaseModel):
    """Delta(P) table for one (n1, n2) pair."""

    model_config = ConfigDict(frozen=True)

    n1: int = Field(ge=1)
    n2: int = Field(ge=1)
    rows: List[SweepRow] = Field(min_length=1)

    @model_validator(mode="after")
    def _ordered_and_closed(self) -> "SweepResult":
        ps = [row.p for row in self.rows]
        if any(b <= a for a, b in zip(ps, ps[1:])):
            raise ValueError("P values must be strictly increasing")
        for row in self.rows:
            if abs(percent_difference(row.born, row.dgp) - row.delta_percent) > DELTA_CLOSURE_TOL:
                raise ValueError(f"delta_percent at P={row.p} does not match born/dgp")
        return self

    @property
    def ps(self) -> List[float]:
        return [row.p for row in self.rows]

    @property
    def deltas(self) -> List[float]:
        return [row.delta_percent for row in self.rows]


class TrendRow(BaseModel):
    """Delta for the equal-weight superposition of the first N states."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n_states: int = Field(ge=2)
    born: float
    dgp: float
    delta_percent: float
    est_error: float = Field(ge=0.0)
    converged: bool
    levels: int
    intersections_per_cell: Optional[Fraction] = None

    @field_serializer("intersections_per_cell")
    def _rational_text(self, value: Optional[Fraction]) -> Optional[str]:
        return None if value is None else str(value)


class IntersectionRow(BaseModel):
    """Crossing count and peak |Delta| for one figure preset."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    n1: int
    n2: int
    reduced: Tuple[int, int]
    gcd: int = Field(ge=1)
    crossings: int
    crossings_per_cell: Fraction
    max_abs_delta: float
    argmax_p: float

    @field_serializer("crossings_per_cell")
    def _rational_text(self, value: Fraction) -> str:
        return str(value)
