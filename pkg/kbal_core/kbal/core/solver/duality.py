from dataclasses import dataclass

from kbal.core.dataset import Dataset
from kbal.core.kernels import gram_blocks, KernelSpec
from kbal.core.solver.ridge import ridge_fit
from kbal.core.solver.weights import solve_weights


@dataclass(frozen=True)
class DualityCheck:
    weighting_estimate: float
    regression_estimate: float

    @property
    def gap(self) -> float:
        return abs(self.weighting_estimate - self.regression_estimate)


def check_duality(data: Dataset, spec: KernelSpec, sigma2: float) -> DualityCheck:
    """Computes the minimax linear estimate twice, once as the weighted average
    n^{-1} sum_{W=0} gamma_i Y_i and once as the kernel ridge regression average
    n^{-1} sum_{T=1} m(X_i), each from its own factorization. The two agree up to rounding."""
    blocks = gram_blocks(data, spec)

    weights = solve_weights(blocks, data.n, sigma2)
    weighting = float(data.y_treated @ weights.gamma) / data.n

    fit = ridge_fit(blocks, data.y_treated, sigma2)
    regression = float(fit.predict_target().sum()) / data.n

    return DualityCheck(weighting, regression)
