import math

import numpy as np
import pandas as pd
import pytest
from kbal.core.errors import ConfigurationError
from kbal.core.simbench import DgpFamily, DgpSpec, run_replications, summaries_to_frame, summarize


def test_summarize_decomposes_rmse():
    rng = np.random.default_rng(0)
    points = rng.normal(1.0, 2.0, size=50)
    half_widths = np.full(50, 3.0)
    covered = np.abs(points - 0.5) <= half_widths

    summary = summarize(points, half_widths, covered, truth=0.5)

    assert summary["rmse"] ** 2 == pytest.approx(summary["bias"] ** 2 + points.var())
    assert summary["bias"] == pytest.approx(points.mean() - 0.5)
    assert summary["mean_half_width"] == 3.0
    assert summary["coverage"] == pytest.approx(covered.mean())


def test_summarize_exact_estimator():
    summary = summarize(np.full(10, 2.0), np.zeros(10), np.ones(10, dtype=bool), truth=2.0)
    assert summary == {"rmse": 0.0, "bias": 0.0, "mean_half_width": 0.0, "coverage": 1.0}
    assert all(math.isnan(value) for value in summarize(np.array([]), np.array([]), np.array([]), 0.0).values())


def test_results_do_not_depend_on_threads():
    dgp = DgpSpec(DgpFamily.KangSchafer, n=60)
    estimators = ["ml", "mlt", "ols", "ipw"]

    serial = run_replications(dgp, estimators, reps=6, base_seed=5, threads=1)
    parallel = run_replications(dgp, estimators, reps=6, base_seed=5, threads=3)

    pd.testing.assert_frame_equal(summaries_to_frame(serial), summaries_to_frame(parallel))


def test_summary_fields():
    dgp = DgpSpec(DgpFamily.Hainmueller, n=80, outcome_design="d1", eta=10.0)
    summaries = run_replications(dgp, ["mlt", "ols"], reps=4)

    assert [s.estimator for s in summaries] == ["mlt", "ols"]
    for summary in summaries:
        assert summary.family == "hainmueller"
        assert summary.design == "d1"
        assert summary.eta == 10.0
        assert summary.truth == 1.5
        assert summary.replications == 4
        assert summary.failures == 0
        assert 0.0 <= summary.coverage <= 1.0
        assert summary.rmse >= abs(summary.bias)
        assert "errors" not in summary.as_dict()

    kang_schafer = run_replications(DgpSpec(n=50), ["ols"], reps=2)[0]
    assert kang_schafer.eta is None and kang_schafer.design is None


def test_failed_replications_are_counted():
    # with two units, some replications have no W=0 or no T=1 unit
    dgp = DgpSpec(DgpFamily.Uniform, n=2)
    summaries = run_replications(dgp, ["ml", "ols"], reps=20, base_seed=1)

    for summary in summaries:
        assert summary.replications + summary.failures == 20
        assert summary.failures > 0
        assert len(summary.errors) == summary.failures
        assert summary.errors[0].startswith("replication ")


def test_rejects_empty_runs():
    with pytest.raises(ConfigurationError):
        run_replications(DgpSpec(n=20), ["ols"], reps=0)
