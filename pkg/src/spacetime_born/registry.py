"""Pipeline registry.

Command-line pipelines register themselves with a decorator and are executed by
name. The registry records a description per pipeline for help output and logs
every execution.
"""

import inspect
from functools import wraps
from typing import Any, Callable, Dict, List, Optional

from spacetime_born.logger import get_logger, log_computation

logger = get_logger(__name__)

PipelineFunction = Callable[..., Any]


class PipelineRegistry:
    """Registry of named pipelines."""

    def __init__(self):
        """Initialize an empty registry."""
        self._pipelines: Dict[str, Dict[str, Any]] = {}

    def register(self, name: Optional[str] = None, description: Optional[str] = None):
        """Decorator to register a function as a pipeline.

        Args:
            name: Pipeline name; defaults to the function name
            description: Help text; defaults to the first docstring line

        Returns:
            Decorator function
        """

        def decorator(func: PipelineFunction) -> PipelineFunction:
            pipeline_name = name or func.__name__
            doc = inspect.getdoc(func) or "No description provided"
            pipeline_description = description or doc.splitlines()[0]

            @wraps(func)
            def wrapper(*args, **kwargs):
                try:
                    result = func(*args, **kwargs)
                except Exception:
                    log_computation(pipeline_name, kwargs, None)
                    raise
                log_computation(pipeline_name, kwargs, getattr(result, "summary", result))
                return result

            if pipeline_name in self._pipelines:
                raise ValueError(f"Pipeline '{pipeline_name}' is already registered")
            self._pipelines[pipeline_name] = {"function": wrapper, "description": pipeline_description}
            logger.debug(f"Registered pipeline: {pipeline_name}")
            return wrapper

        return decorator

    def get_pipeline(self, name: str) -> Optional[PipelineFunction]:
        """Get a pipeline by name, or None if not registered."""
        entry = self._pipelines.get(name)
        return entry["function"] if entry else None

    def list_pipelines(self) -> List[Dict[str, str]]:
        """Names and descriptions of all pipelines, in registration order."""
        return [{"name": name, "description": entry["description"]} for name, entry in self._pipelines.items()]

    def execute(self, name: str, **kwargs) -> Any:
        """Execute a pipeline by name.

        Args:
            name: Pipeline name
            **kwargs: Arguments passed to the pipeline

        Returns:
            Pipeline result

        Raises:
            ValueError: If the pipeline is not registered
        """
        pipeline = self.get_pipeline(name)
        if not pipeline:
            raise ValueError(f"Pipeline '{name}' not found")
        return pipeline(**kwargs)
