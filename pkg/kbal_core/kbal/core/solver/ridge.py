from dataclasses import dataclass

import numpy as np
from kbal.core.common.linalg import spd_factor
from kbal.core.errors import DomainError
from kbal.core.kernels.gram import GramBlocks
from kbal.core.solver.weights import _check_sigma2


@dataclass(frozen=True, eq=False)
class RidgeFit:
    """Kernel ridge regression of the treated outcomes, m = sum_j alpha_j K(., X_j)."""

    dual_coeffs: np.ndarray
    sigma2: float
    jitter_added: float
    blocks: GramBlocks

    def predict(self, x: np.ndarray) -> np.ndarray:
        """Returns an array containing the predictions at (untransformed) covariate points `x`."""
        x = np.asarray(x, dtype=float)
        # make into a 2d array in case a single point is passed in
        if x.ndim == 1:
            x = x[np.newaxis, ...]
        return self.blocks.k_new(x) @ self.dual_coeffs

    def predict_treated(self) -> np.ndarray:
        return self.blocks.k_zz @ self.dual_coeffs

    def predict_target(self) -> np.ndarray:
        return self.blocks.k_zt.T @ self.dual_coeffs


def ridge_fit(blocks: GramBlocks, y_treated: np.ndarray, sigma2: float) -> RidgeFit:
    """Fits m = argmin (1/n_Z) sum (Y_i - m(X_i))^2 + (sigma2/n_Z) ||m||^2 over treated units,
    whose dual coefficients are (K_ZZ + sigma2 I)^{-1} Y."""
    _check_sigma2(sigma2)
    y_treated = np.asarray(y_treated, dtype=float)
    if y_treated.shape != (blocks.n_z,):
        raise DomainError(f"Expected {blocks.n_z} treated outcomes, got shape {y_treated.shape}.")

    factor = spd_factor(blocks.k_zz, penalty=sigma2, scale=np.trace(blocks.k_zz) / blocks.n_z)
    return RidgeFit(factor.solve(y_treated), float(sigma2), factor.jitter, blocks)
