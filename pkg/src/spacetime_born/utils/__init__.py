"""Spacetime Born - Utilities Module.

Environment-driven configuration helpers.
"""

from .env import get_env, get_log_level, get_run_defaults, load_from_env

__all__ = [
    "get_env",
    "get_log_level",
    "get_run_defaults",
    "load_from_env",
]
