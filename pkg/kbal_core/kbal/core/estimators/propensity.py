import warnings
from dataclasses import dataclass

import numpy as np
from kbal.core.common.stats import expit
from kbal.core.dataset import Dataset
from kbal.core.errors import DomainError
from kbal.core.kernels.gram import Standardizer

MAX_ITERATIONS = 100
SCORE_TOLERANCE = 1e-10
CLIP = 1e-6
# beyond this linear predictor the logistic function saturates in double precision,
# so a fit that wants to go there has no finite maximum likelihood estimate
SEPARATION_BOUND = 35.0


@dataclass(eq=False)
class PropensityFit:
    """Logistic regression model of P{W=0 | X}.

    :param coefficients: intercept followed by the slopes, on the scale of the original covariates
    :param fitted: fitted probabilities, clipped to [clip, 1 - clip]
    :param converged: False when the Newton iterations did not converge or the data are separated
    :param iterations: number of Newton steps taken
    :param clip: clipping bound applied to ``fitted``
    :param n_clipped: number of fitted probabilities moved by the clipping
    """

    coefficients: np.ndarray
    fitted: np.ndarray
    converged: bool
    iterations: int
    clip: float = CLIP
    n_clipped: int = 0

    def predict(self, x: np.ndarray) -> np.ndarray:
        """Clipped propensities at new covariate points."""
        x = np.atleast_2d(np.asarray(x, dtype=float))
        eta = self.coefficients[0] + x @ self.coefficients[1:]
        return np.clip(expit(eta), self.clip, 1.0 - self.clip)


def fit_logistic(data: Dataset, clip: float = CLIP, max_iterations: int = MAX_ITERATIONS) -> PropensityFit:
    """Fits P{W=0 | X} by Newton-Raphson on the logistic log-likelihood with an intercept.

    The iterations run on standardized covariates and stop once the largest entry of the
    score of the mean log-likelihood is at most 1e-10. Separated data do not raise:
    the last iterate is returned with ``converged=False``.

    :raises DomainError: unless both W=0 and W!=0 units are present
    """
    labels = data.treated.astype(float)
    if labels.all() or not labels.any():
        raise DomainError("Fitting a propensity model needs units with W=0 and with W!=0.")

    standardizer = Standardizer.fit(data.x)
    design = np.hstack([np.ones((data.n, 1)), standardizer.transform(data.x)])

    beta = np.zeros(design.shape[1])
    converged = False
    separated = False
    iterations = 0

    for iterations in range(1, max_iterations + 1):
        eta = design @ beta
        p = expit(eta)
        score = design.T @ (labels - p) / data.n
        if np.max(np.abs(score)) <= SCORE_TOLERANCE:
            converged = True
            iterations -= 1
            break
        hessian = (design * (p * (1.0 - p))[:, np.newaxis]).T @ design / data.n
        step, *_ = np.linalg.lstsq(hessian, score, rcond=None)
        proposal = beta + step
        if not np.all(np.isfinite(proposal)):
            break
        beta = proposal
        if np.max(np.abs(design @ beta)) > SEPARATION_BOUND:
            separated = True
            break

    if separated:
        converged = False

    # back to the original covariate scale
    slopes = beta[1:] / standardizer.scale
    intercept = beta[0] - slopes @ standardizer.center
    coefficients = np.concatenate([[intercept], slopes])

    raw = expit(design @ beta)
    fitted = np.clip(raw, clip, 1.0 - clip)
    n_clipped = int(np.count_nonzero(fitted != raw))

    if not converged:
        warnings.warn(f"Propensity model did not converge after {iterations} Newton iterations.")

    return PropensityFit(coefficients, fitted, converged, iterations, clip, n_clipped)
