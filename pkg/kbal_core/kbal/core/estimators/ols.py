from typing import List

import numpy as np
from kbal.core.dataset import Dataset
from kbal.core.errors import DomainError

# relative tolerance for deciding that a design column adds no rank
RANK_TOLERANCE = 1e-10


def design_matrix(x: np.ndarray) -> np.ndarray:
    """Prepends an intercept column to the covariates."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    return np.hstack([np.ones((x.shape[0], 1)), x])


def independent_columns(design: np.ndarray, tolerance: float = RANK_TOLERANCE) -> List[int]:
    """Indices of the columns kept when scanning `design` from left to right and
    dropping every column that does not increase the numeric rank."""
    norms = np.linalg.norm(design, axis=0)
    kept = []
    for j in range(design.shape[1]):
        if norms[j] == 0.0:
            continue
        candidate = kept + [j]
        # more columns than rows can never be independent
        if len(candidate) > design.shape[0]:
            break
        normalized = design[:, candidate] / norms[candidate]
        singular_values = np.linalg.svd(normalized, compute_uv=False)
        if singular_values[-1] > tolerance * singular_values[0] * max(normalized.shape):
            kept = candidate
    return kept


class LinearFit:
    """Ordinary least squares fit of the treated outcomes on an intercept and the covariates,
    with collinear columns removed.

    :param beta: coefficients of the kept design columns
    :param columns: indices of the kept columns, 0 is the intercept and j the j-th covariate
    :param n_columns: number of columns of the full design, intercept included
    """

    def __init__(self, beta: np.ndarray, columns: List[int], n_columns: int):
        self.beta = beta
        self.columns = columns
        self.n_columns = n_columns

    @property
    def n_dropped(self) -> int:
        return self.n_columns - len(self.columns)

    def design(self, x: np.ndarray) -> np.ndarray:
        return design_matrix(x)[:, self.columns]

    def value(self, x: np.ndarray) -> np.ndarray:
        """Returns the fitted regression at covariate points `x`."""
        return self.design(x) @ self.beta

    def smoother_weights(self, data: Dataset) -> np.ndarray:
        """Weights gamma on the treated units such that n^{-1} sum gamma_i Y_i equals the
        average prediction n^{-1} sum_{T=1} m(X_i) for any outcome vector."""
        design_treated = self.design(data.x_treated)
        target_total = self.design(data.x_target).sum(axis=0)
        # minimum norm solution of D_Z^T gamma = D_T^T 1, i.e. D_Z (D_Z^T D_Z)^{-1} D_T^T 1
        gamma, *_ = np.linalg.lstsq(design_treated.T, target_total, rcond=None)
        return gamma

    def __repr__(self):
        return f"{self.__class__.__name__}(columns={self.columns})"


def fit_ols(data: Dataset) -> LinearFit:
    """Fits the treated-unit outcome regression used by the OLS, AIPW and variance estimators.

    :raises DomainError: if there are no usable design columns
    """
    if data.n_z == 0:
        raise DomainError("OLS needs at least one treated unit (W=0).")

    design = design_matrix(data.x_treated)
    columns = independent_columns(design)
    if not columns:
        raise DomainError("No usable columns in the OLS design matrix.")

    beta, *_ = np.linalg.lstsq(design[:, columns], data.y_treated, rcond=None)
    return LinearFit(beta, columns, design.shape[1])
