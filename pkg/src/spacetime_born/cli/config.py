"""Validated run configuration for the command-line pipelines."""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from spacetime_born.averaging.quadrature import DEFAULT_MAX_LEVELS, DEFAULT_MIN_LEVELS, MAX_REL_TOL, MIN_REL_TOL
from spacetime_born.analysis.sweeps import MAX_TREND_STATES


class CommandName(str, Enum):
    """Available subcommands."""

    TWO_STATE = "two-state"
    SWEEP = "sweep"
    FIGURES = "figures"
    NSTATE = "nstate"
    VALIDATE = "validate"


class OutputFormat(str, Enum):
    """Artifact formats."""

    CSV = "csv"
    JSON = "json"
    SVG = "svg"


PAIR_COMMANDS = {CommandName.TWO_STATE, CommandName.SWEEP, CommandName.VALIDATE}
POINT_COMMANDS = {CommandName.TWO_STATE, CommandName.VALIDATE}


class RunConfig(BaseModel):
    """One command-line run."""

    command: CommandName
    n1: Optional[int] = Field(default=None, ge=1)
    n2: Optional[int] = Field(default=None, ge=1)
    p: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    grid: int = Field(default=201, ge=2)
    n_max: int = Field(default=5, ge=2, le=MAX_TREND_STATES)
    rel_tol: float = Field(default=1e-4, ge=MIN_REL_TOL, le=MAX_REL_TOL)
    max_levels: int = Field(default=DEFAULT_MAX_LEVELS, ge=DEFAULT_MIN_LEVELS)
    output_dir: str = "output"
    formats: List[OutputFormat] = Field(default_factory=lambda: [OutputFormat.CSV], min_length=1)
    workers: int = Field(default=1, ge=1)

    @field_validator("formats", mode="before")
    @classmethod
    def _split_formats(cls, value):
        if isinstance(value, str):
            return [item.strip() for item in value.split(",") if item.strip()]
        return value

    @field_validator("formats")
    @classmethod
    def _unique_formats(cls, value: List[OutputFormat]) -> List[OutputFormat]:
        return list(dict.fromkeys(value))

    @model_validator(mode="after")
    def _required_inputs(self) -> "RunConfig":
        if self.command in PAIR_COMMANDS:
            if self.n1 is None or self.n2 is None:
                raise ValueError(f"{self.command.value} requires --n1 and --n2")
            if self.n1 == self.n2:
                raise ValueError("n1 and n2 must differ")
        if self.command in POINT_COMMANDS and self.p is None:
            raise ValueError(f"{self.command.value} requires --p")
        return self

    def params(self) -> dict:
        """Inputs relevant to the command, for the run record."""
        data = self.model_dump(mode="json", exclude={"rel_tol", "max_levels"})
        return {key: value for key, value in data.items() if value is not None}

    def tolerances(self) -> dict:
        return {"rel_tol": self.rel_tol, "max_levels": self.max_levels}
