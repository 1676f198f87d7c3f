"""Models for square-well states and field samples."""

import math
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class UnitConvention(BaseModel):
    """Dimensionless units: hbar = 1, 2m = 1, L = 1.

    Eigenvalues become e_n = n^2 pi^2 and angular frequencies equal energies.
    """

    model_config = ConfigDict(frozen=True)

    hbar: float = 1.0
    two_m: float = 1.0
    length: float = 1.0

    def energy_scale(self) -> float:
        """pi^2 hbar^2 / (2 m L^2), the n = 1 eigenvalue."""
        return math.pi**2 * self.hbar**2 / (self.two_m * self.length**2)


UNITS = UnitConvention()


class Eigenstate(BaseModel):
    """A stationary state of the well."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)

    def energy(self) -> float:
        """Eigenvalue n^2 times the energy scale."""
        return float(self.n * self.n) * UNITS.energy_scale()


class Term(BaseModel):
    """One (quantum number, real coefficient) entry of a superposition."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    c: float = Field(allow_inf_nan=False)


class Superposition(BaseModel):
    """Real-coefficient superposition of well eigenstates.

    ``energies`` optionally replaces the eigenvalues with synthetic levels, one per
    term, for degeneracy checks. Every pipeline reads energies through
    :meth:`energy_levels`.
    """

    model_config = ConfigDict(frozen=True)

    terms: List[Term] = Field(min_length=1)
    energies: Optional[List[float]] = None

    @field_validator("terms")
    @classmethod
    def _distinct_and_nonzero(cls, terms: List[Term]) -> List[Term]:
        ns = [term.n for term in terms]
        if len(set(ns)) != len(ns):
            raise ValueError(f"Quantum numbers must be distinct, got {ns}")
        if all(term.c == 0.0 for term in terms):
            raise ValueError("At least one coefficient must be nonzero")
        return terms

    @model_validator(mode="after")
    def _energies_match_terms(self) -> "Superposition":
        if self.energies is not None:
            if len(self.energies) != len(self.terms):
                raise ValueError("Synthetic energies must have one entry per term")
            if not all(math.isfinite(e) for e in self.energies):
                raise ValueError("Synthetic energies must be finite")
        return self

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[Tuple[int, float]], energies: Optional[Sequence[float]] = None
    ) -> "Superposition":
        """Build from (n, c) pairs."""
        return cls(
            terms=[Term(n=n, c=c) for n, c in pairs],
            energies=list(energies) if energies is not None else None,
        )

    @property
    def quantum_numbers(self) -> np.ndarray:
        return np.array([term.n for term in self.terms], dtype=np.int64)

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([term.c for term in self.terms], dtype=np.float64)

    def energy_levels(self) -> np.ndarray:
        """Energies of the terms, synthetic if provided."""
        if self.energies is not None:
            return np.array(self.energies, dtype=np.float64)
        return np.array([Eigenstate(n=term.n).energy() for term in self.terms])

    def scaled(self, factor: float) -> "Superposition":
        """Same state with every coefficient multiplied by ``factor``."""
        if factor == 0.0:
            raise ValueError("Scale factor must be nonzero")
        return Superposition(
            terms=[Term(n=term.n, c=term.c * factor) for term in self.terms],
            energies=self.energies,
        )


class ComplexAmplitude(BaseModel):
    """Value of the wave function at a point."""

    model_config = ConfigDict(frozen=True)

    re: float = Field(allow_inf_nan=False)
    im: float = Field(allow_inf_nan=False)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    @property
    def modulus_squared(self) -> float:
        return self.re**2 + self.im**2


class EnergySample(BaseModel):
    """Pointwise energy at one (x, t); ``value`` is meaningless when not ``defined``."""

    model_config = ConfigDict(frozen=True)

    value: float
    defined: bool
    psi_sq: float


class TwoStateSpec(BaseModel):
    """Normalized two-state superposition parameterized by P = c1^2."""

    model_config = ConfigDict(frozen=True)

    n1: int = Field(ge=1)
    n2: int = Field(ge=1)
    p: float = Field(ge=0.0, le=1.0)
    energies: Optional[Tuple[float, float]] = None

    @model_validator(mode="after")
    def _distinct_states(self) -> "TwoStateSpec":
        if self.n1 == self.n2:
            raise ValueError(f"n1 and n2 must differ, got {self.n1}")
        return self

    @property
    def c1(self) -> float:
        return math.sqrt(self.p)

    @property
    def c2(self) -> float:
        return math.sqrt(1.0 - self.p)

    def energy_pair(self) -> Tuple[float, float]:
        if self.energies is not None:
            return float(self.energies[0]), float(self.energies[1])
        scale = UNITS.energy_scale()
        return self.n1**2 * scale, self.n2**2 * scale

    def superposition(self) -> Superposition:
        """The wave function this spec describes."""
        return Superposition.from_pairs(
            [(self.n1, self.c1), (self.n2, self.c2)],
            energies=list(self.energies) if self.energies is not None else None,
        )
