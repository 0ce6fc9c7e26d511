from dataclasses import dataclass

import numpy as np
from kbal.core.dataset import Dataset
from kbal.core.kernels.kernel import Kernel
from kbal.core.kernels.kernel_spec import build_kernel, KernelSpec


@dataclass(frozen=True, eq=False)
class Standardizer:
    """Affine map x -> (x - center) / scale fitted on a full sample.
    Constant columns get scale 1, so they are centered but not scaled."""

    center: np.ndarray
    scale: np.ndarray

    @classmethod
    def fit(cls, x: np.ndarray) -> "Standardizer":
        center = x.mean(axis=0)
        if x.shape[0] > 1:
            scale = x.std(axis=0, ddof=1)
        else:
            scale = np.zeros(x.shape[1])
        constant = scale <= 1e-12 * np.maximum(1.0, np.abs(center))
        scale = np.where(constant, 1.0, scale)
        return cls(center, scale)

    @classmethod
    def identity(cls, d: int) -> "Standardizer":
        return cls(np.zeros(d), np.ones(d))

    def transform(self, x: np.ndarray) -> np.ndarray:
        return (np.atleast_2d(x) - self.center) / self.scale


@dataclass(frozen=True, eq=False)
class GramBlocks:
    """Gram matrix blocks over treated units (W=0, subscript Z) and target units (T=1, subscript T).

    The kernel, the covariate transform and the transformed covariates are kept alongside so
    that functions fitted on these blocks can be evaluated at new points.
    """

    k_zz: np.ndarray
    k_zt: np.ndarray
    k_tt: np.ndarray
    kernel: Kernel
    standardizer: Standardizer
    x_treated: np.ndarray
    x_target: np.ndarray

    @property
    def n_z(self) -> int:
        return self.k_zz.shape[0]

    @property
    def n_t(self) -> int:
        return self.k_tt.shape[0]

    def k_new(self, x: np.ndarray) -> np.ndarray:
        """Kernel between new (untransformed) points and the treated units, shape (m, n_z)."""
        return self.kernel.k(self.standardizer.transform(x), self.x_treated)


def gram_blocks(data: Dataset, spec: KernelSpec) -> GramBlocks:
    """Builds K_ZZ, K_ZT and K_TT for `data`. When ``spec.standardize`` is set, the
    covariates are standardized with the mean and sample standard deviation of the
    full sample (all n units) before any kernel evaluation.

    :raises DomainError: if there are no treated or no target units
    """
    data.require_groups()

    if spec.standardize:
        standardizer = Standardizer.fit(data.x)
    else:
        standardizer = Standardizer.identity(data.d)

    x = standardizer.transform(data.x)
    x_treated = x[data.treated]
    x_target = x[data.target]

    kernel = build_kernel(spec)

    return GramBlocks(
        k_zz=kernel.R(x_treated),
        k_zt=kernel.k(x_treated, x_target),
        k_tt=kernel.R(x_target),
        kernel=kernel,
        standardizer=standardizer,
        x_treated=x_treated,
        x_target=x_target,
    )
