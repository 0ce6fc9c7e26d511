import numpy as np
import pytest
from kbal.core.dataset import Dataset
from kbal.core.diagnostics import compare_imbalance, default_weight_sets
from kbal.core.kernels import gram_blocks, KernelSpec
from kbal.core.simbench import DgpSpec, generate
from kbal.core.solver import objective_value, solve_weights

from tests import random_dataset


def test_minimax_row_is_minimal():
    data = generate(DgpSpec("kang_schafer", n=100, seed=9))
    table = compare_imbalance(data, KernelSpec(), default_weight_sets(data), sigma=0.1)

    assert list(table["name"]) == ["minimax", "zeros", "ones", "oracle_ipw"]
    assert table.loc[0, "minimal"]
    assert table["objective"].idxmin() == 0
    assert not table["flagged"].any()


def test_minimax_objective_beats_random_candidates():
    data = random_dataset(seed=91, n=80)
    blocks = gram_blocks(data, KernelSpec())
    sigma2 = 0.01
    best = solve_weights(blocks, data.n, sigma2).objective

    rng = np.random.default_rng(0)
    for _ in range(100):
        candidate = rng.uniform(0.0, 4.0, size=data.n_z)
        assert objective_value(blocks, candidate, data.n, sigma2) >= best - 1e-10


def test_zero_weights_imbalance():
    data = random_dataset(seed=92, n=60, all_target=False)
    blocks = gram_blocks(data, KernelSpec())

    table = compare_imbalance(data, KernelSpec(), {"zeros": np.zeros(data.n_z)})
    zeros = table.set_index("name").loc["zeros"]

    assert zeros["imbalance"] == pytest.approx(np.sqrt(blocks.k_tt.sum()) / data.n)
    assert zeros["l2_norm"] == 0.0


def test_ones_balance_when_treated_is_target():
    rng = np.random.default_rng(3)
    data = Dataset(rng.normal(size=(30, 2)), np.zeros(30), rng.normal(size=30), np.ones(30))

    table = compare_imbalance(data, weight_sets={"ones": np.ones(30)})

    assert table.set_index("name").loc["ones", "imbalance"] == pytest.approx(0.0, abs=1e-6)


def test_mismatched_weights_are_flagged():
    data = random_dataset(seed=93, n=40)
    table = compare_imbalance(data, weight_sets={"short": np.ones(3)}).set_index("name")

    assert table.loc["short", "flagged"]
    assert np.isnan(table.loc["short", "objective"])
    assert not table.loc["short", "minimal"]
    assert table.loc["minimax", "minimal"]
