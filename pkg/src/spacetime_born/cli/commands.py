"""Command-line pipelines.

Each pipeline takes the validated :class:`RunConfig` and a result sink, writes its
artifacts, and returns a :class:`CommandOutcome` with the stdout lines and the
summary recorded in the run's JSON sidecar.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from spacetime_born.analysis.models import SweepResult
from spacetime_born.analysis.sweeps import (
    FIGURE_PRESETS,
    default_grid,
    delta_percent,
    figure_preset,
    intersection_row,
    magnitude_summary,
    nstate_trend,
    sweep_delta,
)
from spacetime_born.averaging.closed_form import born_expectation, dgp_two_state, intersection_count
from spacetime_born.averaging.quadrature import validate_two_state
from spacetime_born.cli.config import OutputFormat, RunConfig
from spacetime_born.exceptions import ConvergenceError
from spacetime_born.logger import get_logger
from spacetime_born.output.formatters import create_formatter
from spacetime_born.output.storage import ResultSink
from spacetime_born.physics.models import UNITS, TwoStateSpec
from spacetime_born.registry import PipelineRegistry

logger = get_logger(__name__)

registry = PipelineRegistry()


class CommandOutcome(BaseModel):
    """What a pipeline reports back to the CLI."""

    summary: Dict[str, Any] = Field(default_factory=dict)
    lines: List[str] = Field(default_factory=list)
    ok: bool = True
    failure: Optional[str] = None


def _in_pi_squared(energy: float) -> str:
    return f"{energy / UNITS.energy_scale():.6g} pi^2 ({energy:.12g})"


def _write_sweep(sink: ResultSink, stem: str, result: SweepResult, formats: List[OutputFormat]) -> List[str]:
    written = []
    for fmt in formats:
        formatter = create_formatter(fmt.value)
        written.append(sink.write(f"{stem}.{formatter.extension}", formatter.format_sweep(result)))
    return written


def _two_state_spec(config: RunConfig) -> TwoStateSpec:
    return TwoStateSpec(n1=config.n1, n2=config.n2, p=config.p)


@registry.register("two-state")
def run_two_state(config: RunConfig, sink: ResultSink) -> CommandOutcome:
    """Born and spacetime-averaged energies for one two-state superposition."""
    spec = _two_state_spec(config)
    born = born_expectation(spec.superposition())
    dgp = dgp_two_state(spec)
    delta = delta_percent(born, dgp)
    summary: Dict[str, Any] = {"born": born, "dgp": dgp, "delta_percent": delta}
    if 0.0 < spec.p < 1.0:
        total, per_cell = intersection_count(spec)
        summary.update({"crossings": total, "crossings_per_cell": str(per_cell)})
    lines = [
        f"born={_in_pi_squared(born)}",
        f"dgp={_in_pi_squared(dgp)}",
        f"delta={delta:.4f}%",
    ]
    return CommandOutcome(summary=summary, lines=lines)


@registry.register("sweep")
def run_sweep(config: RunConfig, sink: ResultSink) -> CommandOutcome:
    """Delta(P) table for one (n1, n2) pair."""
    result = sweep_delta(config.n1, config.n2, default_grid(config.grid), workers=config.workers)
    written = _write_sweep(sink, f"sweep_{config.n1}_{config.n2}", result, config.formats)
    peak, argmax_p = magnitude_summary(result)
    return CommandOutcome(
        summary={"rows": len(result.rows), "max_abs_delta": peak, "argmax_p": argmax_p, "files": written},
        lines=[f"max|delta|={peak:.6g}% at P={argmax_p:.6g}"] + [f"wrote {path}" for path in written],
    )


@registry.register("figures")
def run_figures(config: RunConfig, sink: ResultSink) -> CommandOutcome:
    """Delta(P) tables for the five figure presets."""
    summary: Dict[str, Any] = {}
    lines = []
    for name in FIGURE_PRESETS:
        result = figure_preset(name, config.grid, workers=config.workers)
        written = _write_sweep(sink, name, result, config.formats)
        row = intersection_row(name, result)
        summary[name] = row.model_dump(mode="json") | {"files": written}
        lines.append(
            f"{name} (n1={row.n1}, n2={row.n2}): max|delta|={row.max_abs_delta:.6g}% at P={row.argmax_p:.6g}, "
            f"crossings per cell={row.crossings_per_cell}"
        )
    return CommandOutcome(summary=summary, lines=lines)


@registry.register("nstate")
def run_nstate(config: RunConfig, sink: ResultSink) -> CommandOutcome:
    """Delta for equal-weight superpositions of the first N states."""
    rows = nstate_trend(config.n_max, rel_tol=config.rel_tol, workers=config.workers, max_levels=config.max_levels)
    written = []
    for fmt in config.formats:
        if fmt is OutputFormat.SVG:
            logger.warning("SVG output is only available for sweeps; skipping for nstate")
            continue
        formatter = create_formatter(fmt.value)
        written.append(sink.write(f"nstate.{formatter.extension}", formatter.format_trend(rows)))
    lines = [
        f"N={row.n_states}: delta={row.delta_percent:.6g}% (est_error={row.est_error:.3g}, converged={row.converged})"
        for row in rows
    ]
    return CommandOutcome(
        summary={"rows": [row.model_dump(mode="json") for row in rows], "files": written},
        lines=lines + [f"wrote {path}" for path in written],
    )


@registry.register("validate")
def run_validate(config: RunConfig, sink: ResultSink) -> CommandOutcome:
    """Closed-form versus numeric spacetime average for one two-state superposition."""
    comparison = validate_two_state(
        _two_state_spec(config), rel_tol=config.rel_tol, workers=config.workers, max_levels=config.max_levels
    )
    report = comparison.report
    if not report.converged:
        raise ConvergenceError(
            f"Quadrature for n1={config.n1}, n2={config.n2}, P={config.p} did not converge in {report.levels} levels"
        )
    summary = {
        "closed": comparison.closed,
        "numeric": comparison.numeric,
        "agree": comparison.agree,
        "relative_difference": comparison.relative_difference,
        "est_error": report.est_error,
        "levels": report.levels,
        "singular_cells": report.singular_cells,
        "converged": report.converged,
    }
    lines = [
        f"closed={_in_pi_squared(comparison.closed)}",
        f"numeric={_in_pi_squared(comparison.numeric)}",
        f"relative_difference={comparison.relative_difference:.3e}",
        f"agree={str(comparison.agree).lower()}",
    ]
    failure = None if comparison.agree else "closed-form and numeric spacetime averages disagree"
    return CommandOutcome(summary=summary, lines=lines, ok=failure is None, failure=failure)
