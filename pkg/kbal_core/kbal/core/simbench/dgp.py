"""Data generating processes for the simulation benchmarks.

All randomness comes from a ``numpy.random.Generator`` on the PCG64 bit generator.
Normal draws use numpy's ``standard_normal``, chi-squared draws with one degree of
freedom are squared standard normals, and the draws of a dataset are made in a fixed
order (covariates, then selection, then noise) so that a seed fully determines it.
"""

import math
from dataclasses import dataclass, replace
from typing import Callable, Dict, Optional

import numpy as np
from kbal.core.common.stats import expit, normal_cdf
from kbal.core.common.types import Enum
from kbal.core.dataset import Dataset
from kbal.core.errors import ConfigurationError


class DgpFamily(Enum):
    KangSchafer = "kang_schafer"
    Hainmueller = "hainmueller"
    Uniform = "uniform"


class OutcomeDesign(Enum):
    """Outcome models of the Hainmueller family"""

    D1 = "d1"
    D2 = "d2"
    D3 = "d3"


HAINMUELLER_COVARIANCE = np.array([[2.0, 1.0, -1.0], [1.0, 1.0, -0.5], [-1.0, -0.5, 1.0]])
HAINMUELLER_CHOLESKY = np.linalg.cholesky(HAINMUELLER_COVARIANCE)


@dataclass(frozen=True)
class DgpSpec:
    """Settings of one simulated dataset.

    :param family: which data generating process
    :param n: number of units
    :param sigma_eps: standard deviation of the outcome noise
    :param eta: selection scale of the Hainmueller family, sqrt(100) is high overlap and sqrt(30) low overlap
    :param outcome_design: outcome model of the Hainmueller family, ignored otherwise
    :param seed: seed used when no generator is passed in
    :param d: number of covariates of the uniform family
    :param p: P{W=0} = P{T=1} in the uniform family
    """

    family: DgpFamily = DgpFamily.KangSchafer
    n: int = 200
    sigma_eps: float = 1.0
    eta: float = math.sqrt(30.0)
    outcome_design: OutcomeDesign = OutcomeDesign.D1
    seed: int = 0
    d: int = 2
    p: float = 0.5

    def __post_init__(self):
        object.__setattr__(self, "family", DgpFamily(self.family))
        object.__setattr__(self, "outcome_design", OutcomeDesign(self.outcome_design))
        if self.n < 2:
            raise ConfigurationError(f"A simulated dataset needs n >= 2, got {self.n}.")
        if not self.sigma_eps >= 0.0:
            raise ConfigurationError(f"sigma_eps must be nonnegative, got {self.sigma_eps}.")
        if not self.eta > 0.0:
            raise ConfigurationError(f"eta must be positive, got {self.eta}.")
        if self.family == DgpFamily.Uniform:
            if self.d < 2:
                raise ConfigurationError(f"The uniform family needs at least 2 covariates, got {self.d}.")
            if not 0.0 < self.p < 1.0:
                raise ConfigurationError(f"p must be in (0, 1), got {self.p}.")

    @property
    def design(self) -> Optional[OutcomeDesign]:
        return self.outcome_design if self.family == DgpFamily.Hainmueller else None

    def with_n(self, n: int) -> "DgpSpec":
        return replace(self, n=n)

    def label(self) -> str:
        if self.family == DgpFamily.Hainmueller:
            return (
                f"{self.family}(n={self.n}, sigma_eps={self.sigma_eps:g}, "
                f"eta^2={self.eta**2:g}, {self.outcome_design})"
            )
        return f"{self.family}(n={self.n}, sigma_eps={self.sigma_eps:g})"


def _observed_outcomes(regression: np.ndarray, noise: np.ndarray, w: np.ndarray) -> np.ndarray:
    return np.where(w == 0, regression + noise, np.nan)


def gen_kang_schafer(spec: DgpSpec, rng: Optional[np.random.Generator] = None) -> Dataset:
    """Covariates are nonlinear transforms of a latent standard normal Z in 4 dimensions, while
    selection and outcome are linear in Z. Every unit is a target unit."""
    rng = np.random.default_rng(spec.seed) if rng is None else rng
    n = spec.n

    z = rng.standard_normal((n, 4))
    z1, z2, z3, z4 = z.T
    x = np.column_stack(
        [
            np.exp(z1 / 2.0),
            z2 / (1.0 + np.exp(z1) + 10.0),
            (z1 * z3 / 25.0 + 0.06) ** 3,
            (z2 + z4 + 20.0) ** 2,
        ]
    )

    propensity = expit(-z1 + 0.5 * z2 - 0.25 * z3 - 0.1 * z4)
    w = np.where(rng.random(n) < propensity, 0, 1)

    regression = 210.0 + 27.4 * z1 + 13.7 * (z2 + z3 + z4)
    y = _observed_outcomes(regression, spec.sigma_eps * rng.standard_normal(n), w)

    return Dataset(
        x, w, y, np.ones(n, dtype=int), ["x1", "x2", "x3", "x4"], propensity, regression, target_probability=np.ones(n)
    )


def hainmueller_regression(x: np.ndarray, design: OutcomeDesign) -> np.ndarray:
    x1, x2, x3, x4, x5, x6 = x.T
    if design == OutcomeDesign.D1:
        return x1 + x2 + x3 - x4 + x5 + x6
    if design == OutcomeDesign.D2:
        return x1 + x2 + 0.2 * x3 * x4 - np.sqrt(x5)
    return (x1 + x2 + x5) ** 2


def gen_hainmueller(spec: DgpSpec, rng: Optional[np.random.Generator] = None) -> Dataset:
    """Three correlated normal covariates, a uniform, a chi-squared and a Bernoulli covariate,
    with probit selection whose overlap is controlled by eta. Every unit is a target unit."""
    rng = np.random.default_rng(spec.seed) if rng is None else rng
    n = spec.n

    x123 = rng.standard_normal((n, 3)) @ HAINMUELLER_CHOLESKY.T
    x4 = rng.uniform(-3.0, 3.0, n)
    x5 = rng.standard_normal(n) ** 2
    x6 = (rng.random(n) < 0.5).astype(float)
    x = np.column_stack([x123, x4, x5, x6])

    x1, x2, x3 = x123.T
    propensity = normal_cdf((x1 + 2.0 * x2 - 2.0 * x3 - x4 - 0.5 * x5 + x6) / spec.eta)
    w = np.where(rng.random(n) < propensity, 0, 1)

    regression = hainmueller_regression(x, spec.outcome_design)
    y = _observed_outcomes(regression, spec.sigma_eps * rng.standard_normal(n), w)

    names = [f"x{i + 1}" for i in range(6)]
    return Dataset(x, w, y, np.ones(n, dtype=int), names, propensity, regression, target_probability=np.ones(n))


def gen_uniform(spec: DgpSpec, rng: Optional[np.random.Generator] = None) -> Dataset:
    """Uniform covariates on the unit cube, with W and T independent of X and of each other,
    so that the Riesz representer is constant. Y = X1 + X2^2 + noise."""
    rng = np.random.default_rng(spec.seed) if rng is None else rng
    n = spec.n

    x = rng.random((n, spec.d))
    w = np.where(rng.random(n) < spec.p, 0, 1)
    t = (rng.random(n) < spec.p).astype(int)

    regression = x[:, 0] + x[:, 1] ** 2
    y = _observed_outcomes(regression, spec.sigma_eps * rng.standard_normal(n), w)

    return Dataset(
        x, w, y, t, propensity=np.full(n, spec.p), regression=regression, target_probability=np.full(n, spec.p)
    )


GENERATORS: Dict[DgpFamily, Callable[[DgpSpec, Optional[np.random.Generator]], Dataset]] = {
    DgpFamily.KangSchafer: gen_kang_schafer,
    DgpFamily.Hainmueller: gen_hainmueller,
    DgpFamily.Uniform: gen_uniform,
}


def generate(spec: DgpSpec, rng: Optional[np.random.Generator] = None) -> Dataset:
    return GENERATORS[spec.family](spec, rng)


def replication_rng(base_seed: int, replication: int) -> np.random.Generator:
    """Generator of replication `replication`, seeded from the pair (base_seed, replication)
    through ``numpy.random.SeedSequence`` so that streams do not depend on scheduling."""
    return np.random.default_rng(np.random.SeedSequence([base_seed, replication]))
