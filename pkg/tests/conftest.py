import pytest

from spacetime_born.output.storage import create_result_sink
from spacetime_born.physics.models import Superposition, TwoStateSpec

RUN_ENV_VARS = (
    "LOG_LEVEL",
    "SPACETIME_BORN_OUTPUT_DIR",
    "SPACETIME_BORN_REL_TOL",
    "SPACETIME_BORN_WORKERS",
    "SPACETIME_BORN_GRID",
    "SPACETIME_BORN_MAX_LEVELS",
)


@pytest.fixture(autouse=True)
def clean_run_env(monkeypatch):
    """Keep developer environment settings out of the tests"""
    for key in RUN_ENV_VARS:
        monkeypatch.delenv(key, raising=False)


@pytest.fixture
def anchor_spec():
    return TwoStateSpec(n1=1, n2=2, p=0.5)


@pytest.fixture
def equal_pair():
    # (1, 1), (2, 1): unnormalized equal-weight ground + first excited state
    return Superposition.from_pairs([(1, 1.0), (2, 1.0)])


@pytest.fixture
def three_state():
    return Superposition.from_pairs([(1, 0.6), (2, 0.8), (3, 0.3)])


@pytest.fixture
def memory_sink():
    return create_result_sink("memory")


@pytest.fixture
def output_dir(tmp_path):
    return str(tmp_path / "output")


@pytest.fixture
def file_sink(output_dir):
    return create_result_sink("file", output_dir=output_dir)
