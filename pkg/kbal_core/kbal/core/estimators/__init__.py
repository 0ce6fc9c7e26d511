from kbal.core.estimators.att import estimate_att, estimate_dim
from kbal.core.estimators.minimax import (
    DEFAULT_SIGMA,
    estimate_ml,
    estimate_mlt,
    minimax_weights,
    translated_estimate,
)
from kbal.core.estimators.ols import fit_ols, LinearFit
from kbal.core.estimators.propensity import fit_logistic, PropensityFit
from kbal.core.estimators.regression import estimate_ols
from kbal.core.estimators.report import EstimateReport, EstimatorName
from kbal.core.estimators.roster import DEFAULT_ESTIMATORS, EstimatorRoster, parse_estimators
from kbal.core.estimators.variance import estimate_variance, scale_factor, VarianceEstimate
from kbal.core.estimators.weighting import (
    augmented_estimate,
    estimate_aipw,
    estimate_ipw,
    estimate_ipw_oracle,
    weighted_estimate,
)

__all__ = [
    "EstimateReport",
    "EstimatorName",
    "EstimatorRoster",
    "DEFAULT_ESTIMATORS",
    "DEFAULT_SIGMA",
    "parse_estimators",
    "PropensityFit",
    "fit_logistic",
    "LinearFit",
    "fit_ols",
    "VarianceEstimate",
    "estimate_variance",
    "scale_factor",
    "weighted_estimate",
    "augmented_estimate",
    "translated_estimate",
    "minimax_weights",
    "estimate_ml",
    "estimate_mlt",
    "estimate_ols",
    "estimate_ipw",
    "estimate_ipw_oracle",
    "estimate_aipw",
    "estimate_att",
    "estimate_dim",
]
