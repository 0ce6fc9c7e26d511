import numpy as np
from kbal.core.dataset import Dataset


def smooth_outcome(x: np.ndarray) -> np.ndarray:
    return x[:, 0] + np.sin(x[:, 1]) + 0.5 * x[:, 0] * x[:, -1]


def random_dataset(seed: int = 0, n: int = 60, d: int = 3, noise: float = 0.1, all_target: bool = True) -> Dataset:
    """Covariate shifted synthetic data: units with larger first covariate are less likely to have W=0.
    The first two units always have W=0 and W=1, so both groups are present."""
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(n, d))
    propensity = 1.0 / (1.0 + np.exp(x[:, 0]))
    w = np.where(rng.random(n) < propensity, 0, 1)
    w[0], w[1] = 0, 1

    y = smooth_outcome(x) + noise * rng.normal(size=n)
    y[w != 0] = np.nan

    target_probability = np.full(n, 1.0 if all_target else 0.5)
    if all_target:
        t = np.ones(n, dtype=int)
    else:
        t = (rng.random(n) < 0.5).astype(int)
        t[1] = 1
    return Dataset(
        x, w, y, t, propensity=propensity, regression=smooth_outcome(x), target_probability=target_probability
    )
