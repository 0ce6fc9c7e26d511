import numpy as np
from kbal.core.kernels.kernel import Kernel


class LinearKernel(Kernel):
    """K(x, y) = x^T y. Its RKHS is the space of linear functions f(x) = f^T x with the
    Euclidean inner product, so ridge regression in it is ordinary ridge regression."""

    def __init__(self, name: str = "linear"):
        super().__init__(name)

    def k(self, x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
        return np.atleast_2d(x1) @ np.atleast_2d(x2).T

    def __repr__(self):
        return f"{self.__class__.__name__}"
