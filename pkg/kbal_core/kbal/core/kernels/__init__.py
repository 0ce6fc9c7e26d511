from kbal.core.kernels.constant import ConstantKernel
from kbal.core.kernels.gram import gram_blocks, GramBlocks, Standardizer
from kbal.core.kernels.kernel import Kernel, KernelProd, KernelSum
from kbal.core.kernels.kernel_spec import build_kernel, KernelFamily, KernelSpec
from kbal.core.kernels.linear import LinearKernel
from kbal.core.kernels.matern import matern_kernel, MaternKernel
from kbal.core.kernels.rbf import RBF

__all__ = [
    "Kernel",
    "KernelSum",
    "KernelProd",
    "ConstantKernel",
    "LinearKernel",
    "MaternKernel",
    "RBF",
    "matern_kernel",
    "KernelFamily",
    "KernelSpec",
    "build_kernel",
    "GramBlocks",
    "Standardizer",
    "gram_blocks",
]
