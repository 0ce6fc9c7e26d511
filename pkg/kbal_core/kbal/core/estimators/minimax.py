from typing import Tuple

import numpy as np
from kbal.core.dataset import Dataset
from kbal.core.errors import ConfigurationError
from kbal.core.estimators.report import EstimateReport, EstimatorName
from kbal.core.estimators.variance import estimate_variance, scale_factor
from kbal.core.estimators.weighting import weighted_estimate
from kbal.core.kernels import gram_blocks, KernelSpec
from kbal.core.solver import BalanceWeights, solve_weights

DEFAULT_SIGMA = 0.1


def minimax_weights(data: Dataset, spec: KernelSpec, sigma: float) -> BalanceWeights:
    """Minimax linear weights for `data` with penalty sigma^2.

    :raises ConfigurationError: if sigma is negative or not finite
    """
    if not (np.isfinite(sigma) and sigma >= 0.0):
        raise ConfigurationError(f"sigma must be a nonnegative finite number, got {sigma}.")
    return solve_weights(gram_blocks(data, spec), data.n, sigma**2)


def _weights_metadata(weights: BalanceWeights) -> dict:
    return {
        "jitter": weights.jitter_added,
        "max_weight": float(np.max(np.abs(weights.gamma))),
        "weight_sum": weights.weight_sum,
        "imbalance": weights.imbalance,
    }


def estimate_ml(
    data: Dataset,
    spec: KernelSpec = KernelSpec(),
    sigma: float = DEFAULT_SIGMA,
    scaled: bool = True,
    level: float = 0.95,
    name: EstimatorName = EstimatorName.ML,
) -> EstimateReport:
    """Minimax linear estimate n^{-1} sum_{W=0} gamma_i Y_i, multiplied by n / n_T when `scaled`."""
    weights = minimax_weights(data, spec, sigma)
    point = weighted_estimate(data, weights.gamma)
    variance = estimate_variance(data, weights.gamma, point, scaled, level)
    return EstimateReport(
        name,
        point * scale_factor(data, scaled),
        *variance,
        level=level,
        scaled=scaled,
        metadata=_weights_metadata(weights),
    )


def translated_estimate(data: Dataset, gamma: np.ndarray) -> Tuple[float, float]:
    """Returns the translation invariant estimate (n_T/n) Y_0 + n^{-1} sum_{W=0} gamma_i (Y_i - Y_0),
    together with Y_0, the mean outcome of the treated units."""
    y_bar = float(data.y_treated.mean())
    point = data.n_t / data.n * y_bar + float(gamma @ (data.y_treated - y_bar)) / data.n
    return point, y_bar


def estimate_mlt(
    data: Dataset,
    spec: KernelSpec = KernelSpec(),
    sigma: float = DEFAULT_SIGMA,
    scaled: bool = True,
    level: float = 0.95,
    name: EstimatorName = EstimatorName.MLt,
) -> EstimateReport:
    """Minimax linear estimate of the outcomes centered at their treated mean, with the mean added back.
    Shifting every outcome by t shifts the scaled estimate by exactly t."""
    weights = minimax_weights(data, spec, sigma)
    point, _ = translated_estimate(data, weights.gamma)
    variance = estimate_variance(data, weights.gamma, point, scaled, level)
    return EstimateReport(
        name,
        point * scale_factor(data, scaled),
        *variance,
        level=level,
        scaled=scaled,
        metadata=_weights_metadata(weights),
    )
