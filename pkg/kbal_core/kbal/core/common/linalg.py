import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from kbal.core.errors import NumericalError
from scipy import linalg

# jitter schedule, as multiples of the mean diagonal of the unpenalised matrix
JITTER_START = 1e-12
JITTER_MAX = 1e-6


@dataclass(frozen=True, eq=False)
class SPDFactor:
    """Cholesky factor of a symmetric positive definite matrix, together with the
    jitter that had to be added to its diagonal (0.0 when none was needed)."""

    factor: Tuple[np.ndarray, bool]
    jitter: float

    @property
    def lower(self) -> np.ndarray:
        c, lower = self.factor
        return np.tril(c) if lower else np.triu(c).T

    def solve(self, b: np.ndarray) -> np.ndarray:
        return linalg.cho_solve(self.factor, b, check_finite=False)


def condition_estimate(a: np.ndarray) -> float:
    """2-norm condition number of a symmetric matrix from its eigenvalues."""
    eigenvalues = np.abs(linalg.eigvalsh(a))
    if eigenvalues.size == 0 or eigenvalues.min() == 0.0:
        return float("inf")
    return float(eigenvalues.max() / eigenvalues.min())


def spd_factor(a: np.ndarray, penalty: float = 0.0, scale: Optional[float] = None) -> SPDFactor:
    """Factorizes ``a + penalty * I``, escalating a diagonal jitter by factors of ten from
    ``1e-12 * scale`` up to ``1e-6 * scale`` when the factorization fails.

    :param a: symmetric positive semidefinite matrix, for example a Gram matrix
    :param penalty: nonnegative value added to the diagonal before factorizing
    :param scale: size of the diagonal used for the jitter schedule, defaults to trace(a)/n
    :raises NumericalError: if the matrix is not positive definite even with the largest jitter
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if scale is None:
        scale = np.trace(a) / n if n else 1.0
    if not np.isfinite(scale) or scale <= 0.0:
        scale = 1.0

    identity = np.eye(n)
    penalized = a + penalty * identity

    try:
        return SPDFactor(linalg.cho_factor(penalized, lower=True, check_finite=False), 0.0)
    except linalg.LinAlgError:
        pass

    jitter = JITTER_START * scale
    while jitter <= JITTER_MAX * scale * (1 + 1e-9):
        try:
            factor = linalg.cho_factor(penalized + jitter * identity, lower=True, check_finite=False)
        except linalg.LinAlgError:
            jitter *= 10
            continue
        warnings.warn(f"Added jitter of {jitter:.3e} to the diagonal to factorize a {n}x{n} matrix.")
        return SPDFactor(factor, jitter)

    raise NumericalError(
        f"Matrix of size {n}x{n} is not positive definite, even with jitter {JITTER_MAX * scale:.3e}",
        condition=condition_estimate(penalized),
    )
