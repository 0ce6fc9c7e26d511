import numpy as np
import pytest
from kbal.core.dataset import Dataset
from kbal.core.diagnostics import decay_exponent, GramBlock, spectrum
from kbal.core.kernels import gram_blocks, KernelFamily, KernelSpec

from tests import random_dataset


@pytest.mark.parametrize("seed", range(5))
def test_linear_kernel_rank_is_at_most_d(seed):
    data = random_dataset(seed=seed, n=50, d=3)
    report = spectrum(gram_blocks(data, KernelSpec(KernelFamily.Linear)), GramBlock.Treated)

    assert report.numeric_rank <= 3
    assert report.which is GramBlock.Treated


def test_eigenvalues_sum_to_normalized_trace():
    data = random_dataset(seed=8, n=80, all_target=False)
    blocks = gram_blocks(data, KernelSpec(nu=2.5, lengthscale=0.7))

    for which, gram in ((GramBlock.Treated, blocks.k_zz), (GramBlock.Target, blocks.k_tt)):
        report = spectrum(blocks, which)
        assert report.trace == pytest.approx(np.trace(gram) / gram.shape[0], rel=1e-8)
        assert np.all(np.diff(report.eigenvalues) <= 0.0)
        assert np.all(report.eigenvalues >= 0.0)


def test_smoother_kernels_decay_faster():
    grid = np.linspace(0.0, 1.0, 200)
    data = Dataset(grid, np.zeros(200), np.zeros(200), np.ones(200))

    rough = spectrum(gram_blocks(data, KernelSpec(nu=0.5)))
    smooth = spectrum(gram_blocks(data, KernelSpec(nu=2.5)))

    assert rough.fitted_alpha is not None and smooth.fitted_alpha is not None
    assert smooth.fitted_alpha > rough.fitted_alpha > 0.0
    assert rough.fit_range[0] == 3


def test_decay_exponent_of_a_power_law():
    eigenvalues = np.arange(1, 41, dtype=float) ** -2.5

    alpha, fit_range = decay_exponent(eigenvalues)

    assert alpha == pytest.approx(2.5)
    assert fit_range == (3, 40)


def test_short_spectra_have_no_fit():
    assert decay_exponent(np.array([1.0, 0.5, 0.2, 0.1])) == (None, None)
    assert decay_exponent(np.array([1.0, 0.5, 0.2, 0.1, 1e-14, 0.0])) == (None, None)

    x = np.array([0.0, 1.0, 2.0, 3.0, 4.0, 5.0])
    data = Dataset(x, [0, 0, 0, 0, 1, 1], [1.0, 2.0, 3.0, 4.0, np.nan, np.nan], np.ones(6))
    report = spectrum(gram_blocks(data, KernelSpec()))
    assert report.fitted_alpha is None and report.fit_range is None
