"""Normal distribution helpers. ``scipy.special.ndtr`` and ``ndtri`` are accurate to
double precision, well within the 1e-12 needed for tabulated values."""

from typing import Union

import numpy as np
from kbal.core.errors import ConfigurationError
from scipy import special

ArrayLike = Union[float, np.ndarray]


def normal_cdf(x: ArrayLike) -> ArrayLike:
    """Standard normal distribution function, also used as the probit link."""
    return special.ndtr(x)


def normal_quantile(p: ArrayLike) -> ArrayLike:
    """Inverse of :func:`normal_cdf`."""
    return special.ndtri(p)


def z_value(level: float) -> float:
    """Two sided critical value, e.g. 1.959964 for a 0.95 level."""
    if not 0.0 < level < 1.0:
        raise ConfigurationError(f"Confidence level must be in (0, 1), got {level}.")
    return float(normal_quantile(0.5 + level / 2.0))


def expit(x: ArrayLike) -> ArrayLike:
    """Inverse logit."""
    return special.expit(x)
