import numpy as np
import pytest
from kbal.cli.io import load_csv, read_weights, write_weights
from kbal.core.errors import ConfigurationError, ParseError, SchemaError

CSV = "w,y,age,income\n0,1.5,30,2.0\n1,,40,3.5\n0,2.5,50,1.0\n1,7.0,35,0.5\n"


@pytest.fixture
def csv_path(tmp_path):
    path = tmp_path / "data.csv"
    path.write_text(CSV)
    return path


def test_reads_covariates_and_missing_outcomes(csv_path):
    data = load_csv(csv_path)

    assert data.column_names == ["age", "income"]
    np.testing.assert_array_equal(data.w, [0, 1, 0, 1])
    assert np.isnan(data.y[1])
    assert data.y[3] == 7.0
    np.testing.assert_array_equal(data.t, [1, 1, 1, 1])
    np.testing.assert_array_equal(data.x[:, 0], [30, 40, 50, 35])


def test_target_rule(csv_path):
    data = load_csv(csv_path, t_rule="w=1")
    np.testing.assert_array_equal(data.t, [0, 1, 0, 1])

    with pytest.raises(ConfigurationError, match="--t-rule"):
        load_csv(csv_path, t_rule="some")


def test_target_column_and_renamed_columns(tmp_path):
    path = tmp_path / "renamed.csv"
    path.write_text("group,outcome,target,x\n0,1.0,1,0.1\n2,,0,0.2\n0,3.0,1,0.3\n")

    data = load_csv(path, w_col="group", y_col="outcome", t_col="target")

    assert data.column_names == ["x"]
    np.testing.assert_array_equal(data.w, [0, 2, 0])
    np.testing.assert_array_equal(data.t, [1, 0, 1])


def test_missing_outcome_names_the_row(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("w,y,x\n0,1.0,1\n1,,2\n0,,3\n")

    with pytest.raises(SchemaError, match="row 2") as e:
        load_csv(path)
    assert e.value.row == 2


def test_non_numeric_covariate(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("w,y,x\n0,1.0,1\n1,,abc\n")

    with pytest.raises(ParseError, match="row 1"):
        load_csv(path)


def test_missing_column_and_file(tmp_path, csv_path):
    with pytest.raises(SchemaError, match="treatment"):
        load_csv(csv_path, w_col="treatment")
    with pytest.raises(SchemaError, match="does not exist"):
        load_csv(tmp_path / "nothing.csv")


def test_weights_files(csv_path, tmp_path):
    data = load_csv(csv_path)
    path = tmp_path / "weights.csv"

    write_weights(data, np.array([0.25, 1.75]), path)

    assert path.read_text() == "row,weight\n0,0.25\n2,1.75\n"
    np.testing.assert_array_equal(read_weights(path), [0.25, 1.75])

    path.write_text("weight\n1.0\nx\n")
    with pytest.raises(ParseError):
        read_weights(path)


def test_labels_must_be_integers(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("w,y,t,x\n0,1.0,yes,1\n1,,no,2\n0,2.0,yes,3\n")
    with pytest.raises(ParseError, match="row 0") as e:
        load_csv(path, t_col="t")
    assert e.value.row == 0

    path.write_text("w,y,x\n0,1.0,1\n0.7,2.0,2\n1,,3\n")
    with pytest.raises(ParseError, match="row 1") as e:
        load_csv(path)
    assert e.value.row == 1
