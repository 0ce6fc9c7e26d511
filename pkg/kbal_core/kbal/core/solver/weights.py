import math
from dataclasses import dataclass

import numpy as np
from kbal.core.common.linalg import spd_factor
from kbal.core.errors import ConfigurationError, DomainError
from kbal.core.kernels.gram import GramBlocks


@dataclass(frozen=True, eq=False)
class BalanceWeights:
    """Minimax linear weights over the treated units (W=0).

    The weights minimize I_F(gamma)^2 + (sigma2 / n^2) ||gamma||^2, where I_F is the worst case
    imbalance over the unit ball of the RKHS. Units with W != 0 have weight zero and are not stored.
    """

    gamma: np.ndarray
    sigma2: float
    objective: float
    imbalance: float
    jitter_added: float
    n_total: int

    @property
    def weight_sum(self) -> float:
        return float(self.gamma.sum())

    def __len__(self) -> int:
        return len(self.gamma)


def _check_sigma2(sigma2: float):
    if not (math.isfinite(sigma2) and sigma2 >= 0.0):
        raise ConfigurationError(f"Penalty sigma^2 must be a nonnegative finite number, got {sigma2}.")


def balance_norm(blocks: GramBlocks, gamma: np.ndarray, n_total: int) -> float:
    r"""Worst case imbalance I_F(gamma) over the unit ball of the RKHS,

    .. math::

        I_F(\gamma)^2 = n^{-2} [1^T K_{TT} 1 - 2 \gamma^T K_{ZT} 1 + \gamma^T K_{ZZ} \gamma]

    Tiny negative values of the quadratic form, caused by cancellation near perfect balance, are clamped to 0.

    :raises DomainError: if `gamma` does not have one entry per treated unit
    """
    gamma = np.asarray(gamma, dtype=float)
    if gamma.shape != (blocks.n_z,):
        raise DomainError(f"Expected {blocks.n_z} weights (one per treated unit), got shape {gamma.shape}.")

    quadratic = blocks.k_tt.sum() - 2.0 * gamma @ blocks.k_zt.sum(axis=1) + gamma @ blocks.k_zz @ gamma
    return math.sqrt(max(0.0, float(quadratic))) / n_total


def objective_value(blocks: GramBlocks, gamma: np.ndarray, n_total: int, sigma2: float) -> float:
    """Value of the weighting objective I_F(gamma)^2 + (sigma2 / n^2) ||gamma||^2."""
    gamma = np.asarray(gamma, dtype=float)
    return balance_norm(blocks, gamma, n_total) ** 2 + sigma2 / n_total**2 * float(gamma @ gamma)


def solve_weights(blocks: GramBlocks, n_total: int, sigma2: float) -> BalanceWeights:
    """Solves (K_ZZ + sigma2 I) gamma = K_ZT 1 by a Cholesky factorization.

    :param blocks: Gram blocks of the dataset
    :param n_total: number of units n in the whole sample
    :param sigma2: penalty sigma^2, 0 only works when K_ZZ is numerically nonsingular
    :raises NumericalError: if the system cannot be factorized even with the largest jitter
    """
    _check_sigma2(sigma2)

    scale = np.trace(blocks.k_zz) / blocks.n_z
    factor = spd_factor(blocks.k_zz, penalty=sigma2, scale=scale)
    gamma = factor.solve(blocks.k_zt.sum(axis=1))

    imbalance = balance_norm(blocks, gamma, n_total)
    objective = imbalance**2 + sigma2 / n_total**2 * float(gamma @ gamma)

    return BalanceWeights(
        gamma=gamma,
        sigma2=float(sigma2),
        objective=objective,
        imbalance=imbalance,
        jitter_added=factor.jitter,
        n_total=n_total,
    )
