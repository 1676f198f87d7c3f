import pytest
from pydantic import ValidationError

from spacetime_born.cli.config import CommandName, OutputFormat, RunConfig


def test_formats_split_and_deduplicated():
    config = RunConfig(command="figures", formats="csv, svg,csv,json")
    assert config.formats == [OutputFormat.CSV, OutputFormat.SVG, OutputFormat.JSON]


def test_defaults():
    config = RunConfig(command="nstate")
    assert config.command is CommandName.NSTATE
    assert config.grid == 201
    assert config.n_max == 5
    assert config.rel_tol == 1e-4
    assert config.formats == [OutputFormat.CSV]
    assert config.workers == 1


@pytest.mark.parametrize(
    "values",
    [
        {"command": "sweep", "n1": 1},
        {"command": "two-state", "n1": 1, "n2": 2},
        {"command": "validate", "n1": 3, "n2": 3, "p": 0.5},
        {"command": "two-state", "n1": 1, "n2": 2, "p": 1.5},
        {"command": "two-state", "n1": 0, "n2": 2, "p": 0.5},
        {"command": "nstate", "n_max": 7},
        {"command": "nstate", "rel_tol": 1e-9},
        {"command": "nstate", "rel_tol": 0.5},
        {"command": "figures", "formats": "csv,pdf"},
        {"command": "figures", "formats": ""},
        {"command": "figures", "workers": 0},
        {"command": "figures", "grid": 1},
        {"command": "plot"},
    ],
)
def test_invalid_configs(values):
    with pytest.raises(ValidationError):
        RunConfig(**values)


def test_params_and_tolerances():
    config = RunConfig(command="two-state", n1=1, n2=2, p=0.5, rel_tol=1e-3)
    params = config.params()
    assert params["command"] == "two-state"
    assert (params["n1"], params["n2"], params["p"]) == (1, 2, 0.5)
    assert params["formats"] == ["csv"]
    assert "rel_tol" not in params
    assert config.tolerances() == {"rel_tol": 1e-3, "max_levels": config.max_levels}


def test_figures_ignores_pair():
    params = RunConfig(command="figures").params()
    assert "n1" not in params
    assert "p" not in params
