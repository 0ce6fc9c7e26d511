import numpy as np
import pandas as pd
import pytest
from kbal.cli import main as cli
from kbal.cli.io import load_csv
from kbal.core.estimators import EstimatorRoster, minimax_weights
from kbal.core.kernels import KernelSpec


@pytest.fixture(autouse=True)
def no_config_file_defaults(monkeypatch):
    monkeypatch.setattr("kbal.hpc.global_variables.ESTIMATE_DEFAULTS", {})


@pytest.fixture
def data_path(tmp_path):
    rng = np.random.default_rng(0)
    n = 80
    x = rng.normal(size=(n, 2))
    w = np.where(rng.random(n) < 1.0 / (1.0 + np.exp(x[:, 0])), 0, 1)
    w[:2] = [0, 1]
    y = np.where(w == 0, x[:, 0] + np.sin(x[:, 1]) + 0.1 * rng.normal(size=n), np.nan)

    path = tmp_path / "data.csv"
    pd.DataFrame({"w": w, "y": y, "x1": x[:, 0], "x2": x[:, 1]}).to_csv(path, index=False)
    return path


def test_estimate_matches_library(data_path, tmp_path, capsys):
    out = tmp_path / "estimates.csv"

    assert cli.run(["estimate", str(data_path), "--out", str(out)]) == cli.EXIT_OK

    written = pd.read_csv(out)
    reports = EstimatorRoster().run(load_csv(data_path))
    assert list(written["estimator"]) == ["ml", "mlt", "ols", "ipw", "aipw"]
    np.testing.assert_allclose(written["point"], [r.point for r in reports], rtol=1e-12)
    np.testing.assert_allclose(written["ci_low"], [r.ci_low for r in reports], rtol=1e-12)
    assert "estimator" in capsys.readouterr().out


def test_flags_override_config_file(data_path, tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("sigma: 0.5\nestimators: [ml]\n")
    out = tmp_path / "estimates.csv"

    code = cli.run(["estimate", str(data_path), "--config", str(config), "--sigma", "0.2", "--out", str(out)])

    expected = EstimatorRoster(["ml"], sigma=0.2).run(load_csv(data_path))[0]
    written = pd.read_csv(out)
    assert code == cli.EXIT_OK
    assert list(written["estimator"]) == ["ml"]
    assert written["point"][0] == pytest.approx(expected.point, rel=1e-12)


@pytest.mark.parametrize("sigma", ["0", "-0.1"])
def test_invalid_sigma_exits_with_config_code(data_path, sigma, capsys):
    assert cli.run(["estimate", str(data_path), f"--sigma={sigma}"]) == cli.EXIT_CONFIG
    assert "--sigma" in capsys.readouterr().err


def test_unknown_flag_exits_with_config_code(data_path):
    with pytest.raises(SystemExit) as e:
        cli.run(["estimate", str(data_path), "--bandwidth", "2"])
    assert e.value.code == cli.EXIT_CONFIG


def test_schema_error_exits_with_data_code(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("w,y,x\n0,1.0,1\n1,,2\n0,,3\n")

    assert cli.run(["estimate", str(path)]) == cli.EXIT_DATA
    assert "row 2" in capsys.readouterr().err


def test_weights(data_path, tmp_path):
    out = tmp_path / "weights.csv"

    assert cli.run(["weights", str(data_path), "--sigma", "0.3", "--out", str(out)]) == cli.EXIT_OK

    data = load_csv(data_path)
    written = pd.read_csv(out)
    np.testing.assert_array_equal(written["row"], np.flatnonzero(data.w == 0))
    np.testing.assert_allclose(written["weight"], minimax_weights(data, KernelSpec(), 0.3).gamma, rtol=1e-12)


def test_diagnose_flags_wrong_length_weights(data_path, tmp_path, capsys):
    weights = tmp_path / "short.csv"
    weights.write_text("weight\n1.0\n2.0\n")
    out = tmp_path / "diagnose.csv"

    code = cli.run(["diagnose", str(data_path), "--weights", str(weights), "--out", str(out)])

    table = pd.read_csv(out).set_index("name")
    assert code == cli.EXIT_OK
    assert list(table.index) == ["minimax", "zeros", "ones", "short"]
    assert table.loc["short", "flagged"]
    assert table.loc["minimax", "minimal"]
    spectra = pd.read_csv(tmp_path / "diagnose_spectrum.csv")
    assert set(spectra["block"]) == {"treated", "target"}
    assert "wrong number of weights" in capsys.readouterr().out


def test_simulate(tmp_path):
    campaign = tmp_path / "campaign.yaml"
    campaign.write_text("family: uniform\nn: [30]\nsigma_eps: [0.5]\nestimators: [mlt, ols]\nreps: 50\n")
    out = tmp_path / "simulation.csv"

    assert cli.run(["simulate", str(campaign), "--reps", "3", "--seed", "2", "--out", str(out)]) == cli.EXIT_OK

    frame = pd.read_csv(out)
    assert list(frame["estimator"]) == ["mlt", "ols"]
    assert (frame["replications"] + frame["failures"] == 3).all()


def test_simulate_rejects_bad_reps(tmp_path):
    campaign = tmp_path / "campaign.yaml"
    campaign.write_text("family: uniform\nn: [30]\nsigma_eps: [0.5]\n")
    assert cli.run(["simulate", str(campaign), "--reps", "0"]) == cli.EXIT_CONFIG
    assert cli.run(["simulate", str(tmp_path / "missing.yaml")]) == cli.EXIT_CONFIG


def test_switches_before_the_data_path(data_path, tmp_path):
    out = tmp_path / "estimates.csv"
    argv = ["estimate", "--kernel", "matern", "--nu", "1.5", "--sigma", "0.1", "--level", "0.95", "--scaled"]

    assert cli.run(argv + ["--out", str(out), str(data_path)]) == cli.EXIT_OK

    spec = KernelSpec(family="matern", nu=1.5)
    reports = EstimatorRoster(sigma=0.1, spec=spec, scaled=True, level=0.95).run(load_csv(data_path))
    np.testing.assert_allclose(pd.read_csv(out)["point"], [r.point for r in reports], rtol=1e-12)


def test_negated_switches(data_path, tmp_path):
    out = tmp_path / "estimates.csv"
    argv = ["estimate", "--no-scaled", "--no-standardize", "--estimators", "ml", "--out", str(out), str(data_path)]

    assert cli.run(argv) == cli.EXIT_OK

    expected = EstimatorRoster(["ml"], KernelSpec(standardize=False), scaled=False).run(load_csv(data_path))[0]
    written = pd.read_csv(out)
    assert written["point"][0] == pytest.approx(expected.point, rel=1e-12)
    assert not written["scaled"][0]


def test_non_numeric_target_column_exits_with_data_code(tmp_path, capsys):
    path = tmp_path / "labels.csv"
    path.write_text("w,y,t,x\n0,1.0,yes,1\n1,,no,2\n0,2.0,yes,3\n")

    assert cli.run(["estimate", str(path), "--t-col", "t"]) == cli.EXIT_DATA
    assert "row 0" in capsys.readouterr().err
