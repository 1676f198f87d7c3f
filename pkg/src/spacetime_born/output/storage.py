"""Result sinks for emitted artifacts.

This module provides an abstract interface and concrete implementations for the
places run artifacts (CSV tables, JSON documents, SVG plots) are written to.
"""

import os
from abc import ABC, abstractmethod
from typing import Dict, List, Optional

from spacetime_born.logger import get_logger

logger = get_logger(__name__)


class ResultSink(ABC):
    """Abstract base class for artifact sinks."""

    @abstractmethod
    def write(self, name: str, content: str) -> str:
        """
        Store one artifact.

        Args:
            name: File name of the artifact
            content: Text content

        Returns:
            Location of the stored artifact
        """
        pass

    @abstractmethod
    def read(self, name: str) -> Optional[str]:
        """
        Read an artifact back.

        Args:
            name: File name of the artifact

        Returns:
            Content or None if not found
        """
        pass

    @abstractmethod
    def list_outputs(self) -> List[str]:
        """
        List stored artifact names.

        Returns:
            Sorted artifact names
        """
        pass


class MemoryResultSink(ResultSink):
    """In-memory sink, mostly for tests and notebooks."""

    def __init__(self):
        """Initialize the memory sink."""
        self._artifacts: Dict[str, str] = {}
        logger.debug("Memory result sink initialized")

    def write(self, name: str, content: str) -> str:
        self._artifacts[name] = content
        logger.debug(f"Stored {name} in memory ({len(content)} chars)")
        return name

    def read(self, name: str) -> Optional[str]:
        return self._artifacts.get(name)

    def list_outputs(self) -> List[str]:
        return sorted(self._artifacts)


class FileResultSink(ResultSink):
    """Sink writing artifacts into a directory."""

    def __init__(self, output_dir: str):
        """
        Initialize the file sink.

        Args:
            output_dir: Directory for artifacts (created if missing)
        """
        self.output_dir = output_dir
        os.makedirs(self.output_dir, exist_ok=True)
        logger.info(f"File result sink writing to {self.output_dir}")

    def write(self, name: str, content: str) -> str:
        path = os.path.join(self.output_dir, name)
        # newline="" keeps LF line endings on every platform
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(content)
        logger.debug(f"Wrote {path}")
        return path

    def read(self, name: str) -> Optional[str]:
        path = os.path.join(self.output_dir, name)
        if not os.path.exists(path):
            logger.warning(f"Artifact {name} not found in {self.output_dir}")
            return None
        with open(path, "r", encoding="utf-8", newline="") as f:
            return f.read()

    def list_outputs(self) -> List[str]:
        names = os.listdir(self.output_dir)
        return sorted(name for name in names if os.path.isfile(os.path.join(self.output_dir, name)))


def create_result_sink(sink_type: str, **kwargs) -> ResultSink:
    """
    Create a result sink of the specified type.

    Args:
        sink_type: Type of sink ('memory' or 'file')
        **kwargs: Additional arguments for the sink

    Returns:
        Result sink instance

    Raises:
        ValueError: If the sink type is unknown
    """
    if sink_type == "memory":
        return MemoryResultSink()
    elif sink_type == "file":
        output_dir = kwargs.get("output_dir")
        if not output_dir:
            raise ValueError("output_dir is required for file result sink")
        return FileResultSink(output_dir)
    else:
        raise ValueError(f"Unknown result sink type: {sink_type}")
