"""Spacetime Born - Command Line Interface.

This module provides the ``spacetime-born`` command.
"""

from .core import main, run

__all__ = ["main", "run"]
