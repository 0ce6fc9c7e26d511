from typing import NamedTuple, Optional

import numpy as np
from kbal.core.common.stats import z_value
from kbal.core.dataset import Dataset
from kbal.core.errors import DomainError
from kbal.core.estimators.ols import fit_ols, LinearFit


class VarianceEstimate(NamedTuple):
    variance: float
    ci_low: float
    ci_high: float


def scale_factor(data: Dataset, scaled: bool) -> float:
    """n / n_T when estimating psi^c = psi / p_T, with p_T estimated by n_T / n, otherwise 1."""
    if data.n_t == 0:
        raise DomainError("No target units (T=1) in the dataset.")
    return data.n / data.n_t if scaled else 1.0


def estimate_variance(
    data: Dataset,
    weights: np.ndarray,
    point: float,
    scaled: bool,
    level: float = 0.95,
    outcome_fit: Optional[LinearFit] = None,
) -> VarianceEstimate:
    r"""Variance estimate and confidence interval for a weighting estimator

    .. math::

        \hat{V} = n^{-1} \sum_{T_i=1} (\hat{m}(X_i) - \hat{\psi})^2
            + n^{-1} \sum_{W_i=0} \gamma_i^2 (Y_i - \hat{m}(X_i))^2

    where :math:`\hat{m}` is the auxiliary OLS fit on the treated units.

    :param data: the dataset the estimate was computed on
    :param weights: weights on the treated units used by the estimator
    :param point: the unscaled estimate psi, which centers the first sum
    :param scaled: whether the interval is for psi^c, in which case the center is
        point * n / n_T and the half-width is multiplied by n / n_T
    :param level: confidence level
    :param outcome_fit: OLS fit to reuse, fitted here when not given
    """
    adjustment = scale_factor(data, scaled)

    weights = np.asarray(weights, dtype=float)
    if weights.shape != (data.n_z,):
        raise DomainError(f"Expected {data.n_z} weights (one per treated unit), got shape {weights.shape}.")

    fit = outcome_fit if outcome_fit is not None else fit_ols(data)
    m_target = fit.value(data.x_target)
    m_treated = fit.value(data.x_treated)

    variance = (np.sum((m_target - point) ** 2) + np.sum(weights**2 * (data.y_treated - m_treated) ** 2)) / data.n

    center = adjustment * point
    half_width = z_value(level) * adjustment * np.sqrt(variance / data.n)
    return VarianceEstimate(float(variance), float(center - half_width), float(center + half_width))
