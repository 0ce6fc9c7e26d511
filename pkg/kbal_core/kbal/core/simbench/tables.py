from pathlib import Path
from typing import List, Sequence, Union

import numpy as np
import pandas as pd
from kbal.core.simbench.replications import SimulationSummary

SUMMARY_COLUMNS = [
    "family",
    "n",
    "sigma_eps",
    "eta",
    "design",
    "estimator",
    "replications",
    "failures",
    "rmse",
    "bias",
    "mean_half_width",
    "coverage",
    "truth",
    "median_max_weight",
]

# columns that identify a block of a table, one block per outcome noise and selection setting
BLOCK_COLUMNS = ["family", "sigma_eps", "eta", "design"]


def summaries_to_frame(summaries: Sequence[SimulationSummary]) -> pd.DataFrame:
    """One row per cell and estimator, in the order the summaries were produced."""
    return pd.DataFrame([s.as_dict() for s in summaries], columns=SUMMARY_COLUMNS)


def write_csv(summaries: Sequence[SimulationSummary], path: Union[str, Path]):
    """Writes the summaries as CSV. Floats are written with the shortest representation
    that reads back to the same value, so identical runs give identical files."""
    summaries_to_frame(summaries).to_csv(path, index=False, lineterminator="\n")


def _format(value: float, decimals: int) -> str:
    if value is None or (isinstance(value, float) and np.isnan(value)):
        return "-"
    return f"{value:.{decimals}f}"


def _block_title(block: pd.DataFrame) -> str:
    first = block.iloc[0]
    title = f"{first['family']}, sigma_eps = {first['sigma_eps']:g}"
    if isinstance(first["design"], str):
        title += f", eta^2 = {first['eta'] ** 2:.0f}, design {first['design']}"
    return title


def markdown_table(summaries: Sequence[SimulationSummary]) -> str:
    """Markdown tables with one row per estimator and, for every sample size, an rmse/bias pair
    followed by a half-width/coverage pair."""
    frame = summaries_to_frame(summaries)
    if frame.empty:
        return ""

    sections = []
    for _, block in frame.groupby(BLOCK_COLUMNS, sort=False, dropna=False):
        sizes = list(dict.fromkeys(block["n"]))
        estimators = list(dict.fromkeys(block["estimator"]))

        header = ["estimator"]
        header += [f"rmse n={n}" for n in sizes] + [f"bias n={n}" for n in sizes]
        header += [f"half-width n={n}" for n in sizes] + [f"coverage n={n}" for n in sizes]
        lines = [
            f"### {_block_title(block)}",
            "",
            "| " + " | ".join(header) + " |",
            "|" + "|".join(["---"] + ["---:"] * (len(header) - 1)) + "|",
        ]

        for estimator in estimators:
            rows = block[block["estimator"] == estimator].set_index("n")
            cells = [estimator]
            for column, decimals in (("rmse", 1), ("bias", 1), ("mean_half_width", 1), ("coverage", 2)):
                cells += [_format(rows[column].get(n, np.nan), decimals) for n in sizes]
            lines.append("| " + " | ".join(cells) + " |")

        sections.append("\n".join(lines))

    return "\n\n".join(sections) + "\n"


def write_markdown(summaries: Sequence[SimulationSummary], path: Union[str, Path]):
    Path(path).write_text(markdown_table(summaries))


def write_excel(summaries: Sequence[SimulationSummary], path: Union[str, Path]):
    """Writes the summaries to an Excel workbook with one sheet per data generating process family."""
    frame = summaries_to_frame(summaries)

    with pd.ExcelWriter(path, engine="xlsxwriter") as writer:
        workbook = writer.book
        two_decimals = workbook.add_format({"num_format": "0.00"})

        families: List[str] = list(dict.fromkeys(frame["family"]))
        for family in families:
            sheet = frame[frame["family"] == family]
            sheet.to_excel(writer, sheet_name=family[:31], index=False)

            worksheet = writer.sheets[family[:31]]
            worksheet.set_column(0, len(SUMMARY_COLUMNS) - 1, 14)
            first = SUMMARY_COLUMNS.index("rmse")
            last = SUMMARY_COLUMNS.index("median_max_weight")
            worksheet.set_column(first, last, 14, two_decimals)
            worksheet.freeze_panes(1, 0)
