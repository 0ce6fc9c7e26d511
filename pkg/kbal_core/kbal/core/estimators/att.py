import numpy as np
from kbal.core.common.stats import z_value
from kbal.core.dataset import Dataset
from kbal.core.errors import DomainError
from kbal.core.estimators.minimax import DEFAULT_SIGMA, minimax_weights
from kbal.core.estimators.ols import fit_ols
from kbal.core.estimators.report import EstimateReport, EstimatorName
from kbal.core.kernels import KernelSpec


def _check_treatment_setting(data: Dataset):
    if not np.isin(data.w, (0, 1)).all():
        raise DomainError("Treatment effect estimation needs binary labels W in {0, 1}.")
    if not np.array_equal(data.t, (data.w == 1).astype(int)):
        raise DomainError("Treatment effect estimation needs target indicators T = 1{W=1}.")
    data.require_groups()
    if not np.isfinite(data.y[data.target]).all():
        raise DomainError("Outcomes of units with W=1 must be observed.")


def _report(name: EstimatorName, point: float, variance: float, n_t: int, level: float, metadata: dict):
    half_width = z_value(level) * np.sqrt(variance / n_t)
    return EstimateReport(
        name,
        point,
        float(variance),
        point - half_width,
        point + half_width,
        level=level,
        scaled=True,
        metadata=metadata,
    )


def estimate_att(
    data: Dataset, spec: KernelSpec = KernelSpec(), sigma: float = DEFAULT_SIGMA, level: float = 0.95
) -> EstimateReport:
    r"""Average treatment effect on the treated, mean of Y over W=1 minus the scaled minimax
    linear estimate of the same mean under W=0. The variance estimate is V_1 + V_2 with

    .. math::

        V_1 = n_T^{-1} \sum_{W_i=1} Y_i^2 - (n_T^{-1} \sum_{W_i=1} Y_i)^2

        V_2 = n_T^{-1} \sum_{W_i=1} (\hat{m}(X_i) - \hat{\psi})^2
            + n_T^{-1} \sum_{W_i=0} \gamma_i^2 (Y_i - \hat{m}(X_i))^2

    in which psi is the unscaled minimax linear estimate and m the auxiliary OLS fit.
    The interval is tau +/- z * sqrt(V / n_T).
    """
    _check_treatment_setting(data)

    weights = minimax_weights(data, spec, sigma)
    gamma = weights.gamma
    psi = float(data.y_treated @ gamma) / data.n
    psi_scaled = psi * data.n / data.n_t

    y_target = data.y[data.target]
    tau = float(y_target.mean()) - psi_scaled

    outcome_fit = fit_ols(data)
    m_target = outcome_fit.value(data.x_target)
    m_treated = outcome_fit.value(data.x_treated)

    v1 = float(np.mean(y_target**2) - np.mean(y_target) ** 2)
    v2 = (np.sum((m_target - psi) ** 2) + np.sum(gamma**2 * (data.y_treated - m_treated) ** 2)) / data.n_t

    metadata = {"jitter": weights.jitter_added, "max_weight": float(np.max(np.abs(gamma))), "control_mean": psi_scaled}
    return _report(EstimatorName.ATT, tau, max(v1, 0.0) + v2, data.n_t, level, metadata)


def estimate_dim(data: Dataset, level: float = 0.95) -> EstimateReport:
    """Difference in means n_T^{-1} sum_{W=1} Y_i - n_Z^{-1} sum_{W=0} Y_i, the benchmark for an
    experimental sample, with variance V_1 + (n_T / n_Z) s_0^2."""
    _check_treatment_setting(data)

    y_target = data.y[data.target]
    y_treated = data.y_treated
    tau = float(y_target.mean() - y_treated.mean())

    v1 = float(np.var(y_target))
    s0 = float(np.var(y_treated))
    variance = v1 + data.n_t / data.n_z * s0

    return _report(EstimatorName.DIM, tau, variance, data.n_t, level, {})
