"""Core CLI functionality."""

import argparse
import json
import sys
import time
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from spacetime_born import __version__
from spacetime_born.cli.commands import CommandOutcome, registry
from spacetime_born.cli.config import CommandName, RunConfig
from spacetime_born.exceptions import SpacetimeBornError
from spacetime_born.logger import get_logger
from spacetime_born.output.metadata import RunRecord
from spacetime_born.output.storage import ResultSink, create_result_sink
from spacetime_born.utils.env import get_run_defaults

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2


def _add_pair_arguments(parser: argparse.ArgumentParser, with_p: bool) -> None:
    parser.add_argument("--n1", type=int, required=True, help="First quantum number")
    parser.add_argument("--n2", type=int, required=True, help="Second quantum number")
    if with_p:
        parser.add_argument("--p", type=float, required=True, help="Weight P = c1^2 of the first state")


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", dest="output_dir", help="Output directory for artifacts")
    parser.add_argument("--format", dest="formats", help="Comma-separated subset of csv,json,svg")
    parser.add_argument("--tol", dest="rel_tol", type=float, help="Relative quadrature tolerance")
    parser.add_argument("--workers", type=int, help="Worker threads")


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser.

    Returns:
        Parser with one subcommand per pipeline
    """
    parser = argparse.ArgumentParser(
        description="Spacetime-averaged versus Born energy expectation values for the square well",
        prog="spacetime-born",
    )
    parser.add_argument("--version", "-v", action="version", version=f"spacetime-born {__version__}")
    subparsers = parser.add_subparsers(dest="command", help="Command to execute")
    descriptions = {entry["name"]: entry["description"] for entry in registry.list_pipelines()}

    def add_command(command: CommandName) -> argparse.ArgumentParser:
        description = descriptions[command.value]
        return subparsers.add_parser(command.value, help=description, description=description)

    two_state = add_command(CommandName.TWO_STATE)
    _add_pair_arguments(two_state, with_p=True)

    sweep = add_command(CommandName.SWEEP)
    _add_pair_arguments(sweep, with_p=False)
    sweep.add_argument("--grid", type=int, help="Number of uniform P values")

    figures = add_command(CommandName.FIGURES)
    figures.add_argument("--grid", type=int, help="Number of uniform P values")

    nstate = add_command(CommandName.NSTATE)
    nstate.add_argument("--n-max", dest="n_max", type=int, help="Largest number of states (2-6)")

    validate = add_command(CommandName.VALIDATE)
    _add_pair_arguments(validate, with_p=True)

    for sub in (two_state, sweep, figures, nstate, validate):
        _add_common_arguments(sub)

    return parser


def parse_args(args: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parse command-line arguments.

    Args:
        args: Command-line arguments (defaults to sys.argv[1:])

    Returns:
        Parsed arguments
    """
    return build_parser().parse_args(args)


def build_config(namespace: argparse.Namespace) -> RunConfig:
    """
    Merge parsed flags over environment defaults.

    Args:
        namespace: Parsed arguments

    Returns:
        Validated run configuration

    Raises:
        ValidationError: If the merged values are invalid
    """
    values: Dict[str, Any] = dict(get_run_defaults())
    values.update({key: value for key, value in vars(namespace).items() if value is not None})
    return RunConfig(**values)


def _error_record(kind: str, message: str) -> None:
    print(json.dumps({"status": "error", "kind": kind, "message": message}), file=sys.stderr)


def run(config: RunConfig, sink: Optional[ResultSink] = None) -> int:
    """
    Execute one configured pipeline and write its artifacts and sidecar.

    Args:
        config: Validated run configuration
        sink: Destination for artifacts (defaults to a file sink on config.output_dir)

    Returns:
        Exit code: 0 success, 1 numerical failure
    """
    sink = sink or create_result_sink("file", output_dir=config.output_dir)
    started = time.perf_counter()
    outcome: Optional[CommandOutcome] = None
    error: Optional[str] = None

    try:
        outcome = registry.execute(config.command.value, config=config, sink=sink)
    except SpacetimeBornError as e:
        logger.error(f"Numerical failure in {config.command.value}: {e}")
        error = str(e)

    summary = outcome.summary if outcome else {}
    failure = error or (outcome.failure if outcome and not outcome.ok else None)
    if failure:
        summary = {**summary, "error": failure}

    record = RunRecord(
        command=config.command.value,
        params=config.params(),
        tolerances=config.tolerances(),
        results_summary=summary,
        runtime_seconds=time.perf_counter() - started,
    )
    sink.write(f"{config.command.value}.meta.json", record.to_json())

    if outcome:
        for line in outcome.lines:
            print(line)

    if failure:
        _error_record("numerical", failure)
        return EXIT_NUMERICAL
    return EXIT_OK


def main(args: Optional[List[str]] = None) -> int:
    """
    Main entry point for the CLI.

    Args:
        args: Command-line arguments (defaults to sys.argv[1:])

    Returns:
        Exit code
    """
    load_dotenv()

    try:
        parsed_args = parse_args(args)
    except SystemExit as exit_request:
        code = exit_request.code if isinstance(exit_request.code, int) else EXIT_USAGE
        if code != EXIT_OK:
            _error_record("usage", "invalid command-line arguments")
        return code

    if parsed_args.command is None:
        build_parser().print_help()
        return EXIT_USAGE

    try:
        config = build_config(parsed_args)
    except (ValidationError, ValueError) as e:
        _error_record("usage", str(e))
        return EXIT_USAGE

    return run(config)


if __name__ == "__main__":
    sys.exit(main())
