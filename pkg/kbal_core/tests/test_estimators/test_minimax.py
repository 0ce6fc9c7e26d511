import math

import numpy as np
import pytest
from kbal.core.dataset import Dataset
from kbal.core.estimators import (
    estimate_ml,
    estimate_mlt,
    estimate_ols,
    EstimatorName,
    minimax_weights,
)
from kbal.core.kernels import KernelFamily, KernelSpec

from tests import random_dataset


@pytest.mark.parametrize("shift", [1.0, -1000.0, 1e6])
def test_mlt_is_translation_equivariant(shift):
    data = random_dataset(seed=21, n=60)

    base = estimate_mlt(data, sigma=0.1, scaled=True)
    shifted = estimate_mlt(data.shift_outcomes(shift), sigma=0.1, scaled=True)

    assert shifted.point - base.point == pytest.approx(shift, abs=1e-8)


def test_ml_shift_is_scaled_by_weight_sum():
    data = random_dataset(seed=22, n=60)
    gamma = minimax_weights(data, KernelSpec(), 0.1).gamma

    base = estimate_ml(data, sigma=0.1, scaled=True)
    shifted = estimate_ml(data.shift_outcomes(1000.0), sigma=0.1, scaled=True)

    assert not math.isclose(gamma.sum(), data.n_t)
    assert shifted.point - base.point == pytest.approx(1000.0 * gamma.sum() / data.n_t, abs=1e-8)


def test_constant_outcomes():
    data = random_dataset(seed=23, n=40)
    constant = data.with_outcomes(np.where(data.treated, 2.5, np.nan))
    gamma = minimax_weights(constant, KernelSpec(), 0.1).gamma

    assert estimate_mlt(constant).point == pytest.approx(2.5, rel=1e-12)
    assert estimate_ml(constant).point == pytest.approx(2.5 * gamma.sum() / data.n_t, rel=1e-12)


def test_hand_solved_two_unit_instance():
    y = 3.0
    data = Dataset(np.array([[0.0], [1.0]]), [0, 1], [y, np.nan], [0, 1])
    spec = KernelSpec(nu=0.5, standardize=False)
    sigma = 0.5

    gamma = math.exp(-1.0) / (1.0 + sigma**2)
    report = estimate_ml(data, spec, sigma, scaled=False)

    assert report.point == pytest.approx(gamma * y / 2.0)
    assert report.estimator is EstimatorName.ML
    assert not report.scaled
    assert estimate_ml(data, spec, sigma, scaled=True).point == pytest.approx(gamma * y)


def test_all_estimators_agree_when_every_unit_is_treated_and_target():
    rng = np.random.default_rng(5)
    x = rng.normal(size=(25, 2))
    y = x[:, 0] ** 2 + rng.normal(size=25)
    data = Dataset(x, np.zeros(25), y, np.ones(25))

    for report in (estimate_ml(data, sigma=0.0), estimate_mlt(data, sigma=0.0), estimate_ols(data)):
        assert report.point == pytest.approx(y.mean(), abs=1e-8)


def test_ml_approaches_ols_with_linear_kernel():
    data = random_dataset(seed=24, n=80)
    spec = KernelSpec(KernelFamily.Linear, intercept=True)
    ols = estimate_ols(data, scaled=False).point

    gaps = [abs(estimate_ml(data, spec, sigma, scaled=False).point - ols) for sigma in (1.0, 0.3, 0.1, 0.03, 0.01)]

    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-4 * (1 + abs(ols))


def test_report_interval_and_metadata():
    data = random_dataset(seed=25, n=50)
    report = estimate_mlt(data, level=0.9)

    assert report.ci_low <= report.point <= report.ci_high
    assert report.point == pytest.approx(0.5 * (report.ci_low + report.ci_high))
    assert report.level == 0.9
    assert report.variance >= 0.0
    assert {"jitter", "max_weight", "weight_sum", "imbalance"} <= set(report.metadata)
    assert report.as_dict()["estimator"] == "mlt"
