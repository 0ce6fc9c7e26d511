import math
from typing import Union

import numpy as np
from kbal.core.errors import ConfigurationError, DomainError
from kbal.core.kernels.distance import Distance
from kbal.core.kernels.kernel import Kernel

SUPPORTED_NU = (0.5, 1.5, 2.5)

_SQRT3 = math.sqrt(3.0)
_SQRT5 = math.sqrt(5.0)


def check_nu(nu: float) -> float:
    """Returns `nu` as one of the supported half integers or raises ConfigurationError."""
    for supported in SUPPORTED_NU:
        if math.isclose(float(nu), supported, rel_tol=0.0, abs_tol=1e-12):
            return supported
    raise ConfigurationError(f"Matern smoothness nu={nu} is not supported, use one of {SUPPORTED_NU}.")


def matern_kernel(r: Union[float, np.ndarray], nu: float) -> Union[float, np.ndarray]:
    r"""Matern correlation k_nu(r) for half integer smoothness, using the closed forms

    .. math::

        k_{1/2}(r) = e^{-r}, \quad
        k_{3/2}(r) = (1 + \sqrt{3} r) e^{-\sqrt{3} r}, \quad
        k_{5/2}(r) = (1 + \sqrt{5} r + 5 r^2 / 3) e^{-\sqrt{5} r}

    :param r: nonnegative distance(s), already divided by the lengthscale
    :param nu: smoothness, one of 1/2, 3/2, 5/2
    """
    nu = check_nu(nu)
    r_arr = np.asarray(r, dtype=float)
    if (r_arr < 0).any():
        raise DomainError("Matern kernel is only defined for nonnegative distances.")

    if nu == 0.5:
        value = np.exp(-r_arr)
    elif nu == 1.5:
        scaled = _SQRT3 * r_arr
        value = (1.0 + scaled) * np.exp(-scaled)
    else:
        scaled = _SQRT5 * r_arr
        value = (1.0 + scaled + scaled**2 / 3.0) * np.exp(-scaled)

    if np.ndim(r) == 0:
        return float(value)
    return value


class MaternKernel(Kernel):
    """Isotropic Matern kernel K(x, y) = k_nu(||x - y|| / l). Its RKHS is the Sobolev
    space H^s with s = d/2 + nu."""

    def __init__(self, nu: float = 1.5, lengthscale: float = 1.0, name: str = "matern"):
        super().__init__(name)
        self.nu = check_nu(nu)
        self.lengthscale = lengthscale

    def k(self, x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
        dist = Distance.euclidean_distance(x1, x2) / self.lengthscale
        return matern_kernel(dist, self.nu)

    def __repr__(self):
        return f"{self.__class__.__name__}: nu: {self.nu}, lengthscale: {self.lengthscale}"
