from typing import List, Optional, Sequence

import numpy as np
from kbal.core.errors import DomainError, SchemaError


def _integer_labels(values: Sequence, name: str) -> np.ndarray:
    values = np.asarray(values)
    if values.dtype.kind in "iub":
        return values.astype(int)
    try:
        numbers = values.astype(float)
    except (TypeError, ValueError):
        raise DomainError(f"Labels {name} must be integers.") from None
    bad = np.flatnonzero(~np.isfinite(numbers) | (numbers != np.round(numbers)))
    if bad.size:
        row = int(bad[0])
        raise DomainError(f"Labels {name} must be integers, unit {row} has {name}={values.flat[row]}.")
    return numbers.astype(int)


class Dataset:
    """Observations (X_i, W_i, Y_i, T_i) for i = 1..n.

    Units with W_i = 0 are the *treated* units, the ones whose outcomes are observed
    and whose covariate distribution gets reweighted. Units with T_i = 1 form the
    *target* population whose mean outcome (under W=0) is estimated. Outcomes of
    units with W_i != 0 may be missing and are stored as NaN, never as 0.

    :param x: covariate matrix of shape (n, d), no NaNs
    :param w: integer labels, 0 marks a treated unit
    :param y: outcomes, NaN where missing; required wherever W=0
    :param t: binary target indicators
    :param column_names: names of the covariate columns
    :param propensity: optional true P{W=0 | X_i}, only known for simulated data
    :param regression: optional true m(X_i, 0), only known for simulated data
    :param target_probability: optional true P{T=1 | X_i}, only known for simulated data
    """

    def __init__(
        self,
        x: np.ndarray,
        w: Sequence[int],
        y: Sequence[float],
        t: Sequence[int],
        column_names: Optional[List[str]] = None,
        propensity: Optional[np.ndarray] = None,
        regression: Optional[np.ndarray] = None,
        target_probability: Optional[np.ndarray] = None,
    ):
        x = np.asarray(x, dtype=float)
        if x.ndim == 1:
            x = x[:, np.newaxis]
        self.x = x
        self.w = _integer_labels(w, "W")
        self.y = np.asarray(y, dtype=float)
        self.t = _integer_labels(t, "T")
        self.column_names = (
            list(column_names) if column_names is not None else [f"x{i + 1}" for i in range(x.shape[1])]
        )
        self.propensity = None if propensity is None else np.asarray(propensity, dtype=float)
        self.regression = None if regression is None else np.asarray(regression, dtype=float)
        self.target_probability = (
            None if target_probability is None else np.asarray(target_probability, dtype=float)
        )

        self._validate()

    def _validate(self):
        n = self.x.shape[0]
        if n < 2:
            raise DomainError(f"A dataset needs at least 2 units, got {n}.")
        for name in ("w", "y", "t"):
            if getattr(self, name).shape != (n,):
                raise DomainError(f"'{name}' has shape {getattr(self, name).shape}, expected ({n},).")
        if len(self.column_names) != self.x.shape[1]:
            raise DomainError("Number of column names does not match the number of covariates.")
        if np.isnan(self.x).any():
            rows = np.flatnonzero(np.isnan(self.x).any(axis=1))
            raise SchemaError(f"Covariates contain NaN (first row {rows[0]}).", row=int(rows[0]))
        if not np.isin(self.t, (0, 1)).all():
            raise DomainError("Target indicators T must be 0 or 1.")
        missing_treated = np.flatnonzero(self.treated & ~np.isfinite(self.y))
        if missing_treated.size:
            row = int(missing_treated[0])
            raise SchemaError(f"Outcome missing for unit {row} with W=0.", row=row)

    @property
    def n(self) -> int:
        return self.x.shape[0]

    @property
    def d(self) -> int:
        return self.x.shape[1]

    @property
    def treated(self) -> np.ndarray:
        """Boolean mask of units with W=0"""
        return self.w == 0

    @property
    def target(self) -> np.ndarray:
        """Boolean mask of units with T=1"""
        return self.t == 1

    @property
    def n_z(self) -> int:
        return int(self.treated.sum())

    @property
    def n_t(self) -> int:
        return int(self.target.sum())

    @property
    def x_treated(self) -> np.ndarray:
        return self.x[self.treated]

    @property
    def x_target(self) -> np.ndarray:
        return self.x[self.target]

    @property
    def y_treated(self) -> np.ndarray:
        return self.y[self.treated]

    def require_groups(self):
        """Raises DomainError unless there is at least one treated and one target unit."""
        if self.n_z == 0:
            raise DomainError("No treated units (W=0) in the dataset.")
        if self.n_t == 0:
            raise DomainError("No target units (T=1) in the dataset.")

    def riesz_representer(self) -> np.ndarray:
        """True g(X_i) = P{T=1 | X_i} / P{W=0 | X_i} on the treated units of a simulated dataset.

        :raises DomainError: if the true probabilities are not attached
        """
        if self.propensity is None:
            raise DomainError("The true Riesz representer is only known for simulated datasets.")
        if self.target_probability is not None:
            target_probability = self.target_probability[self.treated]
        elif self.target.all():
            target_probability = 1.0
        else:
            raise DomainError("P{T=1 | X} is needed for the Riesz representer when not every unit is a target unit.")
        return target_probability / self.propensity[self.treated]

    def with_outcomes(self, y: np.ndarray) -> "Dataset":
        """Copy of the dataset with the outcomes replaced."""
        return Dataset(
            self.x, self.w, y, self.t, self.column_names, self.propensity, self.regression, self.target_probability
        )

    def shift_outcomes(self, shift: float) -> "Dataset":
        return self.with_outcomes(self.y + shift)

    def __len__(self) -> int:
        return self.n

    def __repr__(self):
        return f"{self.__class__.__name__}(n={self.n}, d={self.d}, n_z={self.n_z}, n_t={self.n_t})"
