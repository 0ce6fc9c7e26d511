import numpy as np
from kbal.core.kernels.kernel import Kernel


class ConstantKernel(Kernel):
    """Implements constant kernel, which scales by a constant factor when used in a kernel product or
    adds the constant functions to the RKHS when used in a kernel sum"""

    def __init__(self, value: float, name: str = "constant"):
        super().__init__(name)
        self.value = float(value)

    def k(self, x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
        return np.full((len(x1), len(x2)), self.value)

    def __repr__(self):
        return f"{self.__class__.__name__}: value: {self.value}"
