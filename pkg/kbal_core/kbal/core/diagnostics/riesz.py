from typing import Callable, Union

import numpy as np
from kbal.core.dataset import Dataset
from kbal.core.errors import DomainError
from kbal.core.estimators.minimax import DEFAULT_SIGMA, minimax_weights
from kbal.core.kernels import KernelSpec

RieszFunction = Callable[[np.ndarray], np.ndarray]


def riesz_error(gamma: np.ndarray, g_values: np.ndarray) -> float:
    """Mean squared distance between two weight sequences over the treated units."""
    gamma = np.asarray(gamma, dtype=float)
    g_values = np.asarray(g_values, dtype=float)
    if gamma.shape != g_values.shape:
        raise DomainError(f"Weight sequences of shapes {gamma.shape} and {g_values.shape} cannot be compared.")
    return float(np.mean((gamma - g_values) ** 2))


def riesz_recovery(
    data: Dataset,
    spec: KernelSpec = KernelSpec(),
    sigma: float = DEFAULT_SIGMA,
    g_true: Union[RieszFunction, np.ndarray, None] = None,
) -> float:
    """How well the minimax linear weights recover the Riesz representer g of the functional,
    measured by n_Z^{-1} sum_{W=0} (gamma_i - g(X_i))^2.

    :param g_true: the true g, either a function of the covariate matrix of the treated units
        or its values on them, a constant is allowed. Defaults to P{T=1 | X} / P{W=0 | X} of a simulated dataset.
    """
    gamma = minimax_weights(data, spec, sigma).gamma

    if g_true is None:
        g_values = data.riesz_representer()
    elif callable(g_true):
        g_values = g_true(data.x_treated)
    else:
        g_values = g_true
    if np.ndim(g_values) == 0:
        g_values = np.full(gamma.shape, float(g_values))

    return riesz_error(gamma, g_values)
