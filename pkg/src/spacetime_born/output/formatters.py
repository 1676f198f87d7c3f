"""Formatters turning sweep and trend tables into artifact text.

This module provides an abstract interface and concrete implementations for the
CSV, JSON and SVG renditions of analysis results.
"""

import csv
import io
import json
from abc import ABC, abstractmethod
from typing import List

from spacetime_born.analysis.models import SweepResult, TrendRow
from spacetime_born.logger import get_logger
from spacetime_born.output.svg import render_line_plot

logger = get_logger(__name__)

SWEEP_HEADER = ["P", "born", "dgp", "delta_percent"]
TREND_HEADER = ["N", "born", "dgp", "delta_percent", "est_error", "converged"]


def format_number(value: float) -> str:
    """Twelve significant digits, '.' decimal separator."""
    return f"{value:.12g}"


class ResultFormatter(ABC):
    """Abstract base class for result formatters."""

    extension: str = ""

    @abstractmethod
    def format_sweep(self, result: SweepResult) -> str:
        """
        Render a sweep table.

        Args:
            result: Sweep to render

        Returns:
            Artifact text
        """
        pass

    def format_trend(self, rows: List[TrendRow]) -> str:
        """
        Render an N-state trend table.

        Args:
            rows: Trend rows

        Returns:
            Artifact text

        Raises:
            ValueError: If the format has no trend rendition
        """
        raise ValueError(f"{type(self).__name__} cannot render trend tables")


class CsvFormatter(ResultFormatter):
    """CSV with a fixed header and LF line endings."""

    extension = "csv"

    def _write(self, header: List[str], rows: List[List[str]]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()

    def format_sweep(self, result: SweepResult) -> str:
        return self._write(
            SWEEP_HEADER,
            [[format_number(v) for v in (row.p, row.born, row.dgp, row.delta_percent)] for row in result.rows],
        )

    def format_trend(self, rows: List[TrendRow]) -> str:
        return self._write(
            TREND_HEADER,
            [
                [str(row.n_states)]
                + [format_number(v) for v in (row.born, row.dgp, row.delta_percent, row.est_error)]
                + [str(row.converged).lower()]
                for row in rows
            ],
        )


class JsonFormatter(ResultFormatter):
    """JSON documents built from the pydantic models."""

    extension = "json"

    def format_sweep(self, result: SweepResult) -> str:
        return result.model_dump_json(indent=2) + "\n"

    def format_trend(self, rows: List[TrendRow]) -> str:
        return json.dumps([row.model_dump(mode="json") for row in rows], indent=2) + "\n"


class SvgFormatter(ResultFormatter):
    """Delta(P) line plot."""

    extension = "svg"

    def format_sweep(self, result: SweepResult) -> str:
        return render_line_plot(
            title=f"Delta(P) for n1={result.n1}, n2={result.n2}",
            x_label="P = c1^2",
            y_label="Delta (%)",
            points=[(row.p, row.delta_percent) for row in result.rows],
        )


def create_formatter(format_type: str) -> ResultFormatter:
    """
    Create a formatter for the given output format.

    Args:
        format_type: One of 'csv', 'json', 'svg'

    Returns:
        Formatter instance

    Raises:
        ValueError: If the format is unknown
    """
    if format_type == "csv":
        return CsvFormatter()
    elif format_type == "json":
        return JsonFormatter()
    elif format_type == "svg":
        return SvgFormatter()
    else:
        raise ValueError(f"Unknown output format: {format_type}")
