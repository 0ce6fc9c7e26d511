from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np
import pandas as pd
from kbal.core.dataset import Dataset
from kbal.core.errors import ConfigurationError, ParseError, SchemaError
from kbal.core.estimators import EstimateReport

T_RULES = ("all", "w=1")


def _label_column(frame: pd.DataFrame, column: str) -> np.ndarray:
    """Integer labels of a column, raising ParseError on the first cell that is not a whole number."""
    values = pd.to_numeric(frame[column], errors="coerce")
    numbers = values.to_numpy(dtype=float)
    bad = np.flatnonzero(~np.isfinite(numbers) | (numbers != np.round(numbers)))
    if bad.size:
        row = int(bad[0])
        cell = frame[column].iloc[row]
        raise ParseError(f"Column '{column}' in row {row} is not an integer label: {cell!r}.", row=row)
    return numbers.astype(int)


def load_csv(
    path: Union[str, Path],
    w_col: str = "w",
    y_col: str = "y",
    t_col: Optional[str] = None,
    t_rule: str = "all",
) -> Dataset:
    """Reads a dataset from a CSV file with a header row.

    Every column other than the W, Y and T columns is a covariate. Empty Y cells are allowed
    on rows with W != 0 only. Without a T column, `t_rule` decides the target units:
    ``all`` makes every unit a target unit and ``w=1`` the units with W = 1.

    :raises SchemaError: on missing columns or a missing outcome for a W=0 row, naming the row
    :raises ParseError: on a covariate cell that is not a number
    """
    path = Path(path)
    if not path.exists():
        raise SchemaError(f"Data file '{path}' does not exist.")
    if t_col is None and t_rule not in T_RULES:
        raise ConfigurationError(f"--t-rule: must be one of {', '.join(T_RULES)}, got '{t_rule}'.")

    frame = pd.read_csv(path, skipinitialspace=True)

    required = [w_col, y_col] + ([t_col] if t_col is not None else [])
    missing = [c for c in required if c not in frame.columns]
    if missing:
        raise SchemaError(f"'{path}' has no column(s) {', '.join(missing)}.")

    covariates = [c for c in frame.columns if c not in required]
    x = np.empty((len(frame), len(covariates)))
    for j, column in enumerate(covariates):
        values = pd.to_numeric(frame[column], errors="coerce")
        bad = values.isna() & frame[column].notna()
        if bad.any():
            row = int(np.flatnonzero(bad.to_numpy())[0])
            cell = frame[column].iloc[row]
            raise ParseError(f"Covariate '{column}' in row {row} is not a number: {cell!r}.", row=row)
        x[:, j] = values.to_numpy(dtype=float)

    w = _label_column(frame, w_col)

    y = pd.to_numeric(frame[y_col], errors="coerce").to_numpy(dtype=float)
    missing_y = np.flatnonzero((w == 0) & ~np.isfinite(y))
    if missing_y.size:
        row = int(missing_y[0])
        raise SchemaError(f"Outcome '{y_col}' is missing in row {row}, which has W=0.", row=row)

    if t_col is not None:
        t = _label_column(frame, t_col)
    elif t_rule == "all":
        t = np.ones(len(frame), dtype=int)
    else:
        t = (w == 1).astype(int)

    return Dataset(x, w, y, t, column_names=[str(c) for c in covariates])


def reports_to_frame(reports: Iterable[EstimateReport]) -> pd.DataFrame:
    return pd.DataFrame([report.as_dict() for report in reports])


def write_reports(reports: Iterable[EstimateReport], path: Union[str, Path]):
    """One row per estimator. Floats keep their shortest round-trip representation."""
    reports_to_frame(reports).to_csv(path, index=False, lineterminator="\n")


def write_weights(data: Dataset, gamma: np.ndarray, path: Union[str, Path]):
    """Weights of the W=0 units, keyed by their row in the data file."""
    frame = pd.DataFrame({"row": np.flatnonzero(data.treated), "weight": gamma})
    frame.to_csv(path, index=False, lineterminator="\n")


def read_weights(path: Union[str, Path]) -> np.ndarray:
    """Reads weights written by :func:`write_weights`, or a single column of numbers."""
    frame = pd.read_csv(path)
    column = "weight" if "weight" in frame.columns else frame.columns[-1]
    values = pd.to_numeric(frame[column], errors="coerce")
    if values.isna().any():
        raise ParseError(f"Weights in '{path}' are not all numbers.")
    return values.to_numpy(dtype=float)
