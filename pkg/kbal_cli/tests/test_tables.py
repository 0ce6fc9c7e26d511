import re

from kbal.cli import tables
from kbal.core.estimators import EstimateReport, EstimatorName

ANSI = re.compile(r"\x1b\[[0-9;]*m")


def test_coloured_estimator_names_keep_columns_aligned(monkeypatch):
    monkeypatch.setattr(tables, "highlight", lambda s: f"\x1b[32m{s}\x1b[0m")
    reports = [
        EstimateReport(EstimatorName.ML, 1.25, 2.0, 1.0, 1.5, 0.95, True, {"max_weight": 3.5}),
        EstimateReport(EstimatorName.IPWOracle, 210.125, 40.0, 200.0, 220.25, 0.95, True),
    ]

    lines = tables.estimate_table(reports).splitlines()
    visible = [ANSI.sub("", line) for line in lines]

    assert len({len(line) for line in visible}) == 1
    assert "\x1b[32m" in lines[2]
    assert visible[2].split()[0] == "ml"
    assert visible[3].split()[0] == "ipw_oracle"
    # header and rule are never coloured
    assert lines[0] == visible[0]
    assert lines[1] == visible[1]


def test_plain_table():
    table = tables.format_table(["a", "long name"], [["1", "2"], ["333", "4"]])

    assert table.splitlines() == ["  a  long name", "---  ---------", "  1          2", "333          4"]
