"""Run records written as JSON sidecars."""

import json
import platform
from datetime import datetime
from typing import Any, Dict, Optional

import numpy as np
import scipy

from spacetime_born import __version__


class RunRecord:
    """Metadata for one command-line run.

    Captures the inputs, tolerances, a results summary and the wall time so any
    emitted table can be traced back to the run that produced it.
    """

    def __init__(
        self,
        command: str,
        params: Dict[str, Any],
        tolerances: Dict[str, Any],
        results_summary: Optional[Dict[str, Any]] = None,
        runtime_seconds: float = 0.0,
    ):
        """Initialize a run record.

        Args:
            command: Subcommand name (e.g. 'sweep')
            params: Command inputs
            tolerances: Numerical tolerances in effect
            results_summary: Key results of the run
            runtime_seconds: Wall time of the run
        """
        self.timestamp = datetime.now().isoformat()
        self.command = command
        self.params = params
        self.tolerances = tolerances
        self.results_summary = results_summary or {}
        self.runtime_seconds = runtime_seconds
        self.versions = {
            "spacetime_born": __version__,
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "python": platform.python_version(),
        }

    def to_dict(self) -> Dict[str, Any]:
        """Convert the record to a dictionary.

        Returns:
            Dictionary representation of the record
        """
        return {
            "command": self.command,
            "params": self.params,
            "tolerances": self.tolerances,
            "results_summary": self.results_summary,
            "runtime_seconds": self.runtime_seconds,
            "versions": self.versions,
            "timestamp": self.timestamp,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=str) + "\n"
