import numpy as np
from kbal.core.dataset import Dataset
from kbal.core.estimators.ols import fit_ols
from kbal.core.estimators.report import EstimateReport, EstimatorName
from kbal.core.estimators.variance import estimate_variance, scale_factor


def estimate_ols(data: Dataset, scaled: bool = True, level: float = 0.95) -> EstimateReport:
    """Averaged regression estimate n^{-1} sum_{T=1} m(X_i) with m fitted by OLS on treated units.
    Its variance uses the weights of the equivalent linear smoother."""
    data.require_groups()
    outcome_fit = fit_ols(data)
    point = float(outcome_fit.value(data.x_target).sum()) / data.n
    weights = outcome_fit.smoother_weights(data)
    variance = estimate_variance(data, weights, point, scaled, level, outcome_fit=outcome_fit)
    return EstimateReport(
        EstimatorName.OLS,
        point * scale_factor(data, scaled),
        *variance,
        level=level,
        scaled=scaled,
        metadata={"dropped_columns": outcome_fit.n_dropped, "max_weight": float(np.max(np.abs(weights)))},
    )
