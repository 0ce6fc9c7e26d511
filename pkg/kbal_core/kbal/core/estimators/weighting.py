import numpy as np
from kbal.core.dataset import Dataset
from kbal.core.errors import DomainError
from kbal.core.estimators.ols import fit_ols
from kbal.core.estimators.propensity import PropensityFit
from kbal.core.estimators.report import EstimateReport, EstimatorName
from kbal.core.estimators.variance import estimate_variance, scale_factor


def weighted_estimate(data: Dataset, weights: np.ndarray) -> float:
    """n^{-1} sum_{W=0} gamma_i Y_i"""
    return float(data.y_treated @ weights) / data.n


def augmented_estimate(data: Dataset, weights: np.ndarray, m_treated: np.ndarray, m_target: np.ndarray) -> float:
    """n^{-1} [sum_{T=1} m(X_i) + sum_{W=0} gamma_i (Y_i - m(X_i))]"""
    return float(m_target.sum() + weights @ (data.y_treated - m_treated)) / data.n


def _inverse_propensity_weights(data: Dataset, propensity: np.ndarray) -> np.ndarray:
    propensity = np.asarray(propensity, dtype=float)
    if propensity.shape != (data.n,):
        raise DomainError(f"Expected {data.n} propensities, got shape {propensity.shape}.")
    return 1.0 / propensity[data.treated]


def _weight_metadata(fit: PropensityFit, weights: np.ndarray) -> dict:
    return {
        "converged": fit.converged,
        "iterations": fit.iterations,
        "max_weight": float(np.max(weights)),
        "clipped": fit.n_clipped,
    }


def estimate_ipw(data: Dataset, fit: PropensityFit, scaled: bool = True, level: float = 0.95) -> EstimateReport:
    """Inverse propensity weighting estimate n^{-1} sum_{W=0} Y_i / e(X_i)."""
    data.require_groups()
    weights = _inverse_propensity_weights(data, fit.fitted)
    point = weighted_estimate(data, weights)
    variance = estimate_variance(data, weights, point, scaled, level)
    return EstimateReport(
        EstimatorName.IPW,
        point * scale_factor(data, scaled),
        *variance,
        level=level,
        scaled=scaled,
        metadata=_weight_metadata(fit, weights),
    )


def estimate_ipw_oracle(data: Dataset, scaled: bool = True, level: float = 0.95) -> EstimateReport:
    """IPW with the true propensities attached to a simulated dataset.

    :raises DomainError: if the dataset carries no true propensities
    """
    if data.propensity is None:
        raise DomainError("True propensities are only available for simulated datasets.")
    data.require_groups()
    weights = _inverse_propensity_weights(data, data.propensity)
    point = weighted_estimate(data, weights)
    variance = estimate_variance(data, weights, point, scaled, level)
    return EstimateReport(
        EstimatorName.IPWOracle,
        point * scale_factor(data, scaled),
        *variance,
        level=level,
        scaled=scaled,
        metadata={"max_weight": float(np.max(weights))},
    )


def estimate_aipw(data: Dataset, fit: PropensityFit, scaled: bool = True, level: float = 0.95) -> EstimateReport:
    """Augmented inverse probability weighting with the OLS outcome regression."""
    data.require_groups()
    outcome_fit = fit_ols(data)
    weights = _inverse_propensity_weights(data, fit.fitted)

    point = augmented_estimate(data, weights, outcome_fit.value(data.x_treated), outcome_fit.value(data.x_target))
    variance = estimate_variance(data, weights, point, scaled, level, outcome_fit=outcome_fit)
    return EstimateReport(
        EstimatorName.AIPW,
        point * scale_factor(data, scaled),
        *variance,
        level=level,
        scaled=scaled,
        metadata=_weight_metadata(fit, weights),
    )
