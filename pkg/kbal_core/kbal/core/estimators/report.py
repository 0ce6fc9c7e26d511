from dataclasses import dataclass, field
from typing import Any, Dict

from kbal.core.common.types import Enum


class EstimatorName(Enum):
    """Estimators that can be requested by name, e.g. from the command line."""

    ML = "ml"
    MLt = "mlt"
    OLS = "ols"
    IPW = "ipw"
    AIPW = "aipw"
    ATT = "att"
    DIM = "dim"
    IPWOracle = "ipw_oracle"
    # minimax linear estimators with sigma multiplied by 10 and 100
    ML10 = "ml10"
    ML100 = "ml100"
    MLt10 = "mlt10"
    MLt100 = "mlt100"

    @property
    def sigma_multiplier(self) -> float:
        if self.value.endswith("100"):
            return 100.0
        if self.value.endswith("10"):
            return 10.0
        return 1.0


@dataclass
class EstimateReport:
    """Point estimate, variance estimate V (on the per-observation scale) and confidence interval.

    ``metadata`` holds soft diagnostics of the fit, such as the jitter added to a Gram matrix,
    the largest weight or whether the propensity model converged.
    """

    estimator: EstimatorName
    point: float
    variance: float
    ci_low: float
    ci_high: float
    level: float
    scaled: bool
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def half_width(self) -> float:
        return 0.5 * (self.ci_high - self.ci_low)

    def covers(self, value: float) -> bool:
        return self.ci_low <= value <= self.ci_high

    def as_dict(self) -> Dict[str, Any]:
        row = {
            "estimator": str(self.estimator),
            "point": self.point,
            "variance": self.variance,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "level": self.level,
            "scaled": self.scaled,
        }
        row.update(self.metadata)
        return row
