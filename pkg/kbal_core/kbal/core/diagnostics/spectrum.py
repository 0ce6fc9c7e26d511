from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from kbal.core.common.types import Enum
from kbal.core.errors import DomainError
from kbal.core.kernels.gram import GramBlocks
from scipy import linalg

# eigenvalues below this fraction of the largest one are treated as numerically zero
NOISE_FLOOR = 1e-10
# the leading eigenvalues are left out of the decay fit
FIRST_FITTED = 3
MIN_FITTED = 5


class GramBlock(Enum):
    Treated = "treated"
    Target = "target"


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """Eigenvalues of Gram / n, in decreasing order, and the exponent alpha of a fitted
    decay lambda_j ~ j^{-alpha}.

    ``fitted_alpha`` and ``fit_range`` are None when fewer than five eigenvalues are usable.
    ``fit_range`` holds 1-based indices, both ends included.
    """

    eigenvalues: np.ndarray
    fitted_alpha: Optional[float]
    fit_range: Optional[Tuple[int, int]]
    which: GramBlock

    @property
    def numeric_rank(self) -> int:
        if len(self.eigenvalues) == 0 or self.eigenvalues[0] <= 0.0:
            return 0
        return int(np.count_nonzero(self.eigenvalues > NOISE_FLOOR * self.eigenvalues[0]))

    @property
    def trace(self) -> float:
        return float(self.eigenvalues.sum())


def decay_exponent(eigenvalues: np.ndarray) -> Tuple[Optional[float], Optional[Tuple[int, int]]]:
    """Least squares slope of log lambda_j against log j over j = 3..j_max, where j_max is the
    last index whose eigenvalue is above the noise floor. Returns (alpha, (3, j_max))."""
    if len(eigenvalues) < MIN_FITTED or eigenvalues[0] <= 0.0:
        return None, None

    j_max = int(np.count_nonzero(eigenvalues > NOISE_FLOOR * eigenvalues[0]))
    if j_max < MIN_FITTED:
        return None, None

    indices = np.arange(FIRST_FITTED, j_max + 1)
    slope, _ = np.polyfit(np.log(indices), np.log(eigenvalues[indices - 1]), 1)
    return float(-slope), (FIRST_FITTED, j_max)


def spectrum(blocks: GramBlocks, which: GramBlock = GramBlock.Treated) -> SpectrumReport:
    """Empirical spectrum of the kernel integral operator, estimated by the eigenvalues of K / n
    for the Gram matrix of the treated (K_ZZ) or the target (K_TT) units.

    :raises DomainError: if the selected block is empty
    """
    which = GramBlock(which)
    gram = blocks.k_zz if which == GramBlock.Treated else blocks.k_tt
    n = gram.shape[0]
    if n == 0:
        raise DomainError(f"The {which} Gram block is empty.")

    eigenvalues = linalg.eigvalsh(gram / n)[::-1]
    # rounding can leave tiny negative eigenvalues of a positive semidefinite matrix
    eigenvalues = np.clip(eigenvalues, 0.0, None)

    alpha, fit_range = decay_exponent(eigenvalues)
    return SpectrumReport(eigenvalues, alpha, fit_range, which)
