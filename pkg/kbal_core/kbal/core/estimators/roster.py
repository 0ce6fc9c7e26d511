from typing import Iterable, List, Optional, Union

from kbal.core.dataset import Dataset
from kbal.core.errors import ConfigurationError
from kbal.core.estimators.att import estimate_att, estimate_dim
from kbal.core.estimators.minimax import DEFAULT_SIGMA, estimate_ml, estimate_mlt
from kbal.core.estimators.propensity import fit_logistic, PropensityFit
from kbal.core.estimators.regression import estimate_ols
from kbal.core.estimators.report import EstimateReport, EstimatorName
from kbal.core.estimators.weighting import estimate_aipw, estimate_ipw, estimate_ipw_oracle
from kbal.core.kernels import KernelSpec

DEFAULT_ESTIMATORS = (EstimatorName.ML, EstimatorName.MLt, EstimatorName.OLS, EstimatorName.IPW, EstimatorName.AIPW)


def parse_estimators(names: Union[str, Iterable[Union[str, EstimatorName]]]) -> List[EstimatorName]:
    """Turns a comma separated string, or a list of names, into estimator names, keeping the order.

    :raises ConfigurationError: on an unknown name
    """
    if isinstance(names, str):
        names = [name.strip() for name in names.split(",") if name.strip()]
    parsed = []
    for name in names:
        try:
            parsed.append(EstimatorName(name))
        except ValueError:
            raise ConfigurationError(
                f"Unknown estimator '{name}', choose from {', '.join(EstimatorName.values)}."
            ) from None
    return parsed


class EstimatorRoster:
    """Runs a list of estimators on one dataset, fitting the propensity model at most once."""

    def __init__(
        self,
        estimators: Iterable[Union[str, EstimatorName]] = DEFAULT_ESTIMATORS,
        spec: KernelSpec = KernelSpec(),
        sigma: float = DEFAULT_SIGMA,
        scaled: bool = True,
        level: float = 0.95,
    ):
        self.estimators = parse_estimators(estimators)
        self.spec = spec
        self.sigma = sigma
        self.scaled = scaled
        self.level = level

    def _propensity(self, data: Dataset, cache: dict) -> PropensityFit:
        if "fit" not in cache:
            cache["fit"] = fit_logistic(data)
        return cache["fit"]

    def _ml(self, data: Dataset, estimator: EstimatorName, cache: dict) -> EstimateReport:
        sigma = self.sigma * estimator.sigma_multiplier
        return estimate_ml(data, self.spec, sigma, self.scaled, self.level, name=estimator)

    def _mlt(self, data: Dataset, estimator: EstimatorName, cache: dict) -> EstimateReport:
        sigma = self.sigma * estimator.sigma_multiplier
        return estimate_mlt(data, self.spec, sigma, self.scaled, self.level, name=estimator)

    def _ols(self, data: Dataset, estimator: EstimatorName, cache: dict) -> EstimateReport:
        return estimate_ols(data, self.scaled, self.level)

    def _ipw(self, data: Dataset, estimator: EstimatorName, cache: dict) -> EstimateReport:
        return estimate_ipw(data, self._propensity(data, cache), self.scaled, self.level)

    def _aipw(self, data: Dataset, estimator: EstimatorName, cache: dict) -> EstimateReport:
        return estimate_aipw(data, self._propensity(data, cache), self.scaled, self.level)

    def _ipw_oracle(self, data: Dataset, estimator: EstimatorName, cache: dict) -> EstimateReport:
        return estimate_ipw_oracle(data, self.scaled, self.level)

    def _att(self, data: Dataset, estimator: EstimatorName, cache: dict) -> EstimateReport:
        return estimate_att(data, self.spec, self.sigma, self.level)

    def _dim(self, data: Dataset, estimator: EstimatorName, cache: dict) -> EstimateReport:
        return estimate_dim(data, self.level)

    # method of the roster that runs each estimator
    DISPATCH = {
        EstimatorName.ML: _ml,
        EstimatorName.ML10: _ml,
        EstimatorName.ML100: _ml,
        EstimatorName.MLt: _mlt,
        EstimatorName.MLt10: _mlt,
        EstimatorName.MLt100: _mlt,
        EstimatorName.OLS: _ols,
        EstimatorName.IPW: _ipw,
        EstimatorName.AIPW: _aipw,
        EstimatorName.IPWOracle: _ipw_oracle,
        EstimatorName.ATT: _att,
        EstimatorName.DIM: _dim,
    }

    def estimate(self, data: Dataset, estimator: EstimatorName, cache: Optional[dict] = None) -> EstimateReport:
        """Runs one estimator. Estimators sharing `cache` share the fitted propensity model."""
        cache = {} if cache is None else cache
        estimator = EstimatorName(estimator)
        return self.DISPATCH[estimator](self, data, estimator, cache)

    def run(self, data: Dataset) -> List[EstimateReport]:
        cache = {}
        return [self.estimate(data, estimator, cache) for estimator in self.estimators]
