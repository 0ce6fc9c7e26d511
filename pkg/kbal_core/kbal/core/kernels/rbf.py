import numpy as np
from kbal.core.kernels.distance import Distance
from kbal.core.kernels.kernel import Kernel


class RBF(Kernel):
    r"""
    Implementation of the Gaussian (radial basis function) kernel

    .. math::

        k(x, y) = \exp\left(-\frac{\|x - y\|^2}{2l^2}\right)

    where ``l`` is the lengthscale value.
    """

    def __init__(self, lengthscale: float = 1.0, name: str = "gaussian"):
        super().__init__(name)
        self.lengthscale = lengthscale

    def k(self, x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
        dist = Distance.squared_euclidean_distance(x1 / self.lengthscale, x2 / self.lengthscale)
        return np.exp(-0.5 * dist)

    def __repr__(self):
        return f"{self.__class__.__name__}: lengthscale: {self.lengthscale}"
