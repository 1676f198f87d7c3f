"""Artifact output: sinks, formatters, SVG plots and run metadata."""

from spacetime_born.output.formatters import (
    CsvFormatter,
    JsonFormatter,
    ResultFormatter,
    SvgFormatter,
    create_formatter,
    format_number,
)
from spacetime_born.output.metadata import RunRecord
from spacetime_born.output.storage import FileResultSink, MemoryResultSink, ResultSink, create_result_sink
from spacetime_born.output.svg import render_line_plot

__all__ = [
    "CsvFormatter",
    "JsonFormatter",
    "ResultFormatter",
    "SvgFormatter",
    "create_formatter",
    "format_number",
    "RunRecord",
    "FileResultSink",
    "MemoryResultSink",
    "ResultSink",
    "create_result_sink",
    "render_line_plot",
]
