import json
import os

import pytest

from spacetime_born import __version__
from spacetime_born.averaging.quadrature import QuadratureReport, TwoStateComparison
from spacetime_born.cli.commands import registry
from spacetime_born.cli.config import RunConfig
from spacetime_born.cli.core import EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, build_config, main, parse_args, run
from spacetime_born.exceptions import RootIsolationError
from spacetime_born.physics.models import TwoStateSpec


@pytest.fixture(autouse=True)
def no_dotenv(mocker):
    return mocker.patch("spacetime_born.cli.core.load_dotenv")


def _last_json(stream: str) -> dict:
    return json.loads(stream.strip().splitlines()[-1])


def _meta(output_dir: str, command: str) -> dict:
    with open(os.path.join(output_dir, f"{command}.meta.json"), encoding="utf-8") as f:
        return json.load(f)


def test_two_state_anchor(output_dir, capsys):
    code = main(["two-state", "--n1", "1", "--n2", "2", "--p", "0.5", "--out", output_dir])
    assert code == EXIT_OK

    out = capsys.readouterr().out
    assert "born=2.5 pi^2" in out
    assert "dgp=3 pi^2" in out
    assert "delta=-16.6667%" in out

    meta = _meta(output_dir, "two-state")
    assert meta["command"] == "two-state"
    assert meta["params"]["p"] == 0.5
    assert meta["results_summary"]["crossings"] == 2
    assert meta["results_summary"]["crossings_per_cell"] == "2"
    assert meta["results_summary"]["delta_percent"] == pytest.approx(-50 / 3, abs=1e-9)


def test_two_state_pure_has_no_crossings(output_dir):
    assert main(["two-state", "--n1", "1", "--n2", "2", "--p", "1", "--out", output_dir]) == EXIT_OK
    assert "crossings" not in _meta(output_dir, "two-state")["results_summary"]


def test_sweep_writes_every_format(output_dir, capsys):
    code = main(["sweep", "--n1", "1", "--n2", "3", "--grid", "11", "--format", "csv,json,svg", "--out", output_dir])
    assert code == EXIT_OK
    assert sorted(os.listdir(output_dir)) == [
        "sweep.meta.json",
        "sweep_1_3.csv",
        "sweep_1_3.json",
        "sweep_1_3.svg",
    ]
    with open(os.path.join(output_dir, "sweep_1_3.csv"), encoding="utf-8") as f:
        assert len(f.read().splitlines()) == 12
    assert _meta(output_dir, "sweep")["results_summary"]["rows"] == 11
    assert "wrote" in capsys.readouterr().out


def test_figures_writes_presets(output_dir):
    assert main(["figures", "--grid", "5", "--out", output_dir]) == EXIT_OK
    for name in ("fig1", "fig2", "fig3", "fig4", "fig5"):
        assert os.path.exists(os.path.join(output_dir, f"{name}.csv"))
    summary = _meta(output_dir, "figures")["results_summary"]
    assert summary["fig1"]["n1"] == 1
    assert summary["fig1"]["crossings_per_cell"] == "2"


def test_nstate_skips_svg(output_dir, mocker):
    rows = mocker.patch("spacetime_born.cli.commands.nstate_trend", return_value=[])
    code = main(["nstate", "--n-max", "3", "--format", "csv,svg", "--out", output_dir])
    assert code == EXIT_OK
    assert rows.call_args.args == (3,)
    assert os.path.exists(os.path.join(output_dir, "nstate.csv"))
    assert not os.path.exists(os.path.join(output_dir, "nstate.svg"))


@pytest.mark.parametrize(
    "argv",
    [
        ["sweep", "--n1", "1"],
        ["two-state", "--n1", "one", "--n2", "2", "--p", "0.5"],
        ["plot"],
    ],
)
def test_parse_errors_are_usage(argv, output_dir, capsys):
    assert main(argv + ["--out", output_dir]) == EXIT_USAGE
    record = _last_json(capsys.readouterr().err)
    assert record["status"] == "error"
    assert record["kind"] == "usage"


@pytest.mark.parametrize(
    "argv",
    [
        ["two-state", "--n1", "2", "--n2", "2", "--p", "0.5"],
        ["two-state", "--n1", "1", "--n2", "2", "--p", "1.5"],
        ["nstate", "--n-max", "9"],
        ["sweep", "--n1", "1", "--n2", "2", "--format", "png"],
    ],
)
def test_invalid_values_are_usage(argv, output_dir, capsys):
    assert main(argv + ["--out", output_dir]) == EXIT_USAGE
    assert _last_json(capsys.readouterr().err)["kind"] == "usage"
    assert not os.path.exists(output_dir)


def test_version(capsys):
    assert main(["--version"]) == EXIT_OK
    assert __version__ in capsys.readouterr().out


def test_help_lists_registered_pipelines(monkeypatch, capsys):
    monkeypatch.setenv("COLUMNS", "200")
    assert main(["--help"]) == EXIT_OK
    out = capsys.readouterr().out
    for entry in registry.list_pipelines():
        assert entry["name"] in out
        assert entry["description"] in out


def test_missing_command_prints_help(capsys):
    assert main([]) == EXIT_USAGE
    assert "usage" in capsys.readouterr().out


def test_numerical_failure(output_dir, mocker, capsys):
    mocker.patch.object(registry, "execute", side_effect=RootIsolationError("bracket count unstable"))
    code = main(["two-state", "--n1", "1", "--n2", "2", "--p", "0.5", "--out", output_dir])
    assert code == EXIT_NUMERICAL

    record = _last_json(capsys.readouterr().err)
    assert record["kind"] == "numerical"
    assert "unstable" in record["message"]
    assert _meta(output_dir, "two-state")["results_summary"]["error"] == "bracket count unstable"


def test_validate_disagreement(memory_sink, mocker, capsys):
    spec = TwoStateSpec(n1=1, n2=2, p=0.5)
    report = QuadratureReport(value=31.0, est_error=1e-6, levels=5, singular_cells=0, converged=True, period=1.0)
    mocker.patch(
        "spacetime_born.cli.commands.validate_two_state",
        return_value=TwoStateComparison(spec=spec, closed=29.6, numeric=31.0, agree=False, report=report),
    )
    config = RunConfig(command="validate", n1=1, n2=2, p=0.5)
    assert run(config, sink=memory_sink) == EXIT_NUMERICAL

    captured = capsys.readouterr()
    assert "agree=false" in captured.out
    assert _last_json(captured.err)["kind"] == "numerical"
    meta = json.loads(memory_sink.read("validate.meta.json"))
    assert meta["results_summary"]["agree"] is False


def test_validate_unconverged(memory_sink, mocker):
    spec = TwoStateSpec(n1=1, n2=2, p=0.5)
    report = QuadratureReport(value=29.0, est_error=1.0, levels=12, singular_cells=0, converged=False, period=1.0)
    mocker.patch(
        "spacetime_born.cli.commands.validate_two_state",
        return_value=TwoStateComparison(spec=spec, closed=29.6, numeric=29.0, agree=False, report=report),
    )
    config = RunConfig(command="validate", n1=1, n2=2, p=0.5)
    assert run(config, sink=memory_sink) == EXIT_NUMERICAL
    assert "did not converge" in json.loads(memory_sink.read("validate.meta.json"))["results_summary"]["error"]


def test_environment_defaults(monkeypatch):
    monkeypatch.setenv("SPACETIME_BORN_GRID", "7")
    monkeypatch.setenv("SPACETIME_BORN_REL_TOL", "1e-3  # looser")
    config = build_config(parse_args(["sweep", "--n1", "1", "--n2", "3"]))
    assert config.grid == 7
    assert config.rel_tol == 1e-3

    override = build_config(parse_args(["sweep", "--n1", "1", "--n2", "3", "--grid", "9"]))
    assert override.grid == 9


def test_bad_environment_is_usage(monkeypatch, capsys):
    monkeypatch.setenv("SPACETIME_BORN_WORKERS", "many")
    assert main(["figures", "--grid", "3"]) == EXIT_USAGE
    assert "SPACETIME_BORN_WORKERS" in _last_json(capsys.readouterr().err)["message"]


@pytest.mark.slow
def test_validate_anchor(output_dir, capsys):
    code = main(["validate", "--n1", "1", "--n2", "2", "--p", "0.5", "--tol", "1e-3", "--out", output_dir])
    assert code == EXIT_OK
    assert "agree=true" in capsys.readouterr().out
    meta = _meta(output_dir, "validate")
    assert meta["tolerances"]["rel_tol"] == 1e-3
    assert meta["results_summary"]["converged"] is True
