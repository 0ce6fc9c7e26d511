"""Human readable tables printed by the command line."""

import math
from typing import Iterable, List, Sequence

import pandas as pd
from kbal.cli.options import highlight, warning_text
from kbal.core.diagnostics import SpectrumReport
from kbal.core.estimators import EstimateReport


def _row(cells: Sequence[str], widths: Sequence[int], highlighted: Sequence[int] = ()) -> str:
    padded = [cell.rjust(width) for cell, width in zip(cells, widths)]
    # colour codes go on after padding, they have no width on screen
    return "  ".join(highlight(cell) if j in highlighted else cell for j, cell in enumerate(padded))


def _number(value, decimals: int = 2) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "-"
    return f"{value:.{decimals}f}"


def format_table(header: List[str], rows: List[List[str]], highlighted: Sequence[int] = ()) -> str:
    """Right aligned columns, the columns in `highlighted` are coloured in the body rows."""
    widths = [max([len(header[j])] + [len(row[j]) for row in rows]) for j in range(len(header))]
    lines = [_row(header, widths), _row(["-" * w for w in widths], widths)]
    lines += [_row(row, widths, highlighted) for row in rows]
    return "\n".join(lines)


def report_warnings(report: EstimateReport) -> List[str]:
    messages = []
    metadata = report.metadata
    if metadata.get("jitter"):
        messages.append(f"{report.estimator}: added jitter {metadata['jitter']:.1e} to the Gram matrix")
    if metadata.get("converged") is False:
        messages.append(f"{report.estimator}: propensity model did not converge")
    if metadata.get("clipped"):
        messages.append(f"{report.estimator}: {metadata['clipped']} propensities clipped")
    return messages


def estimate_table(reports: Iterable[EstimateReport]) -> str:
    reports = list(reports)
    header = ["estimator", "estimate", "half-width", "ci low", "ci high", "max weight"]
    rows = [
        [
            str(report.estimator),
            _number(report.point),
            _number(report.half_width),
            _number(report.ci_low),
            _number(report.ci_high),
            _number(report.metadata.get("max_weight")),
        ]
        for report in reports
    ]
    messages = [warning_text(m) for report in reports for m in report_warnings(report)]
    return "\n".join([format_table(header, rows, highlighted=[0])] + messages)


def spectrum_summary(report: SpectrumReport) -> str:
    alpha = "-" if report.fitted_alpha is None else f"{report.fitted_alpha:.2f}"
    fit_range = "-" if report.fit_range is None else f"{report.fit_range[0]}..{report.fit_range[1]}"
    return (
        f"{report.which} block: {len(report.eigenvalues)} eigenvalues, numeric rank {report.numeric_rank}, "
        f"trace {report.trace:.4g}, decay exponent {alpha} (fitted over {fit_range})"
    )


def imbalance_table(table: pd.DataFrame) -> str:
    header = ["weights", "imbalance", "l2 norm", "objective"]
    rows = [
        [str(row["name"]), _number(row["imbalance"], 4), _number(row["l2_norm"]), _number(row["objective"], 6)]
        for _, row in table.iterrows()
    ]
    messages = [warning_text(f"{name}: wrong number of weights") for name in table.loc[table["flagged"], "name"]]
    return "\n".join([format_table(header, rows)] + messages)
