from typing import Mapping, Optional, Sequence

import numpy as np
import pandas as pd
from kbal.core.dataset import Dataset
from kbal.core.estimators.minimax import DEFAULT_SIGMA
from kbal.core.kernels import gram_blocks, KernelSpec
from kbal.core.solver import balance_norm, objective_value, solve_weights

MINIMAX_NAME = "minimax"
IMBALANCE_COLUMNS = ["name", "imbalance", "l2_norm", "objective", "flagged", "minimal"]


def compare_imbalance(
    data: Dataset,
    spec: KernelSpec = KernelSpec(),
    weight_sets: Optional[Mapping[str, Sequence[float]]] = None,
    sigma: float = DEFAULT_SIGMA,
) -> pd.DataFrame:
    """Worst case imbalance I_F, l2 norm and weighting objective of each named weight set,
    with the minimax linear weights added as the first row.

    Weight sets whose length is not the number of treated units are kept as flagged rows with
    missing values. The ``minimal`` column marks the rows attaining the smallest objective.
    """
    blocks = gram_blocks(data, spec)
    sigma2 = sigma**2
    weights = solve_weights(blocks, data.n, sigma2)

    named = {MINIMAX_NAME: weights.gamma}
    named.update(weight_sets or {})

    rows = []
    for name, gamma in named.items():
        gamma = np.asarray(gamma, dtype=float)
        if gamma.shape != (blocks.n_z,):
            rows.append([name, np.nan, np.nan, np.nan, True, False])
            continue
        rows.append(
            [
                name,
                balance_norm(blocks, gamma, data.n),
                float(np.linalg.norm(gamma)),
                objective_value(blocks, gamma, data.n, sigma2),
                False,
                False,
            ]
        )

    table = pd.DataFrame(rows, columns=IMBALANCE_COLUMNS)
    valid = ~table["flagged"]
    if valid.any():
        smallest = table.loc[valid, "objective"].min()
        table.loc[valid, "minimal"] = table.loc[valid, "objective"] <= smallest * (1 + 1e-12) + 1e-15
    return table


def default_weight_sets(data: Dataset) -> dict:
    """Reference weights compared against the minimax linear weights: all zeros, all ones and,
    for simulated data, the inverse true propensities."""
    sets = {"zeros": np.zeros(data.n_z), "ones": np.ones(data.n_z)}
    if data.propensity is not None:
        sets["oracle_ipw"] = 1.0 / data.propensity[data.treated]
    return sets
