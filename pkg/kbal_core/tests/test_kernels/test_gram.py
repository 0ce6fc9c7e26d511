import math

import numpy as np
import pytest
from kbal.core.dataset import Dataset
from kbal.core.errors import DomainError
from kbal.core.kernels import (
    build_kernel,
    gram_blocks,
    KernelFamily,
    KernelSpec,
    matern_kernel,
    MaternKernel,
    Standardizer,
)

from tests import random_dataset


def test_standardizer_uses_sample_standard_deviation():
    x = np.array([[1.0, 5.0], [2.0, 5.0], [3.0, 5.0], [6.0, 5.0]])
    standardizer = Standardizer.fit(x)
    z = standardizer.transform(x)

    np.testing.assert_allclose(z[:, 0].mean(), 0.0, atol=1e-15)
    np.testing.assert_allclose(z[:, 0].std(ddof=1), 1.0)
    # constant column is centered but not scaled
    np.testing.assert_array_equal(standardizer.scale[1], 1.0)
    np.testing.assert_array_equal(z[:, 1], 0.0)


def test_blocks_shapes_and_values():
    data = random_dataset(seed=3, n=40, all_target=False)
    spec = KernelSpec()
    blocks = gram_blocks(data, spec)

    assert blocks.k_zz.shape == (data.n_z, data.n_z)
    assert blocks.k_zt.shape == (data.n_z, data.n_t)
    assert blocks.k_tt.shape == (data.n_t, data.n_t)
    np.testing.assert_array_equal(blocks.k_zz, blocks.k_zz.T)

    x = Standardizer.fit(data.x).transform(data.x)
    kernel = build_kernel(spec)
    np.testing.assert_allclose(blocks.k_zt, kernel.k(x[data.treated], x[data.target]))
    np.testing.assert_allclose(blocks.k_new(data.x[:3]), kernel.k(x[:3], x[data.treated]))


def test_standardized_gram_is_invariant_to_affine_covariate_changes():
    data = random_dataset(seed=5, n=30)
    moved = Dataset(3.0 * data.x + 7.0, data.w, data.y, data.t)

    a = gram_blocks(data, KernelSpec())
    b = gram_blocks(moved, KernelSpec())

    np.testing.assert_allclose(a.k_zz, b.k_zz, atol=1e-12)
    np.testing.assert_allclose(a.k_zt, b.k_zt, atol=1e-12)


def test_unstandardized_linear_gram():
    data = random_dataset(seed=2, n=20)
    blocks = gram_blocks(data, KernelSpec(KernelFamily.Linear, standardize=False))

    np.testing.assert_allclose(blocks.k_tt, data.x_target @ data.x_target.T)


def test_no_treated_units():
    data = Dataset(np.zeros((3, 1)), [1, 1, 1], [np.nan] * 3, [1, 1, 1])
    with pytest.raises(DomainError):
        gram_blocks(data, KernelSpec())


def test_blocks_match_a_direct_double_loop():
    rng = np.random.default_rng(17)
    x = rng.normal(size=(5, 3))
    data = Dataset(x, [0, 1, 0, 1, 0], [1.0, np.nan, 2.0, np.nan, 3.0], [0, 1, 1, 1, 0])
    spec = KernelSpec(nu=1.5, lengthscale=0.8)

    blocks = gram_blocks(data, spec)

    z = (x - x.mean(axis=0)) / x.std(axis=0, ddof=1)
    direct = np.empty((5, 5))
    for i in range(5):
        for j in range(5):
            direct[i, j] = matern_kernel(math.sqrt(np.sum((z[i] - z[j]) ** 2)) / 0.8, 1.5)
    np.testing.assert_allclose(blocks.k_zz, direct[np.ix_(data.treated, data.treated)], atol=1e-12)
    np.testing.assert_allclose(blocks.k_zt, direct[np.ix_(data.treated, data.target)], atol=1e-12)
    np.testing.assert_allclose(blocks.k_tt, direct[np.ix_(data.target, data.target)], atol=1e-12)


@pytest.mark.parametrize(
    "spec",
    [KernelSpec(nu=0.5), KernelSpec(nu=1.5), KernelSpec(nu=2.5), KernelSpec("gaussian"), KernelSpec("linear")],
)
def test_treated_gram_is_positive_semidefinite(spec):
    rng = np.random.default_rng(23)
    for n in (10, 80, 200):
        x = rng.normal(size=(n, int(rng.integers(1, 6))))
        # duplicated rows make the Gram singular
        x[1] = x[0]
        data = Dataset(x, np.zeros(n), rng.normal(size=n), np.ones(n))
        k_zz = gram_blocks(data, spec).k_zz

        assert np.linalg.eigvalsh(k_zz).min() >= -1e-8 * np.trace(k_zz)


def test_standardizing_twice_changes_nothing():
    data = random_dataset(seed=12, n=50, all_target=False)
    standardized = Standardizer.fit(data.x).transform(data.x)
    again = Dataset(standardized, data.w, data.y, data.t)

    a = gram_blocks(data, KernelSpec())
    b = gram_blocks(again, KernelSpec())

    np.testing.assert_allclose(Standardizer.fit(standardized).transform(standardized), standardized, atol=1e-12)
    np.testing.assert_allclose(a.k_zz, b.k_zz, rtol=0, atol=1e-12)
    np.testing.assert_allclose(a.k_zt, b.k_zt, rtol=0, atol=1e-12)
    np.testing.assert_allclose(a.k_tt, b.k_tt, rtol=0, atol=1e-12)


def test_exponential_matern_closed_form():
    rng = np.random.default_rng(29)
    r = rng.exponential(scale=2.0, size=100)
    lengthscale = 1.7

    gram = MaternKernel(nu=0.5, lengthscale=lengthscale).k(np.zeros((1, 1)), r[:, np.newaxis])

    np.testing.assert_allclose(gram[0], np.exp(-r / lengthscale), rtol=1e-14)
    np.testing.assert_allclose(matern_kernel(r / lengthscale, 0.5), np.exp(-r / lengthscale), rtol=1e-14)
