# pylint: disable=missing-module-docstring
import json
import math

import numpy
import pytest

from multiphoton_interference import constants
from multiphoton_interference import exceptions
from multiphoton_interference import results
from multiphoton_interference.results import Check
from multiphoton_interference.results import ScanResult


def _result():
    return ScanResult(
        "hom_dip",
        "delay",
        [
            (1.0, {"coincidence": 0.25, "closed_form": 0.25}),
            (-1.0, {"coincidence": 0.1 + 0.2, "closed_form": 0.3}),
            (0.0, {"coincidence": 0.0, "closed_form": 0.0}),
        ],
        {"transmissivity": 0.5},
        [Check("dip_minimum", 0.0, 0.0, 1e-12)],
    )


def test_rows_are_sorted():
    """Test that rows are kept in scan order"""
    result = _result()
    assert result.column("delay") == [-1.0, 0.0, 1.0]
    assert result.column("closed_form") == [0.3, 0.0, 0.25]
    assert result.observables == ("coincidence", "closed_form")


def test_rows_must_agree():
    """Test that every row needs the same observables"""
    with pytest.raises(exceptions.ExperimentError):
        ScanResult("hom_dip", "delay", [(0.0, {"a": 1.0}), (1.0, {"b": 1.0})])


def test_check_pass_fail():
    """Test the tolerance comparison of checks"""
    assert Check("ok", 1.0, 1.0 + 1e-13, 1e-12).passed
    assert not Check("off", 1.0, 1.1, 1e-3).passed
    assert not Check("nan", 1.0, math.nan, math.inf).passed

    result = _result()
    assert result.passed
    result.checks.append(Check("off", 1.0, 1.1, 1e-3))
    assert not result.passed


def test_csv_round_trip(tmp_path):
    """Test that values survive the CSV file bit for bit"""
    result = _result()
    path = results.write_csv(result, tmp_path / "nested")

    assert path.name == "hom_dip.csv"
    parameter, rows = results.read_csv(path)
    assert parameter == "delay"
    assert rows == result.rows
    assert [item.name for item in path.parent.iterdir()] == ["hom_dip.csv"]


def test_summary(tmp_path):
    """Test the content of the run summary"""
    result = _result()
    result.metadata["fit"] = {"harmonic": numpy.int64(2), "visibility": numpy.float64(1.0)}
    result.checks.append(Check("numpy_scalar", 1.0, numpy.float64(1.0), 1e-12))
    path = results.write_summary(result, {"alpha": 0.1 + 0.2j, "photons": 4}, tmp_path)

    assert path.name == "hom_dip.summary.json"
    summary = json.loads(path.read_text())
    assert summary["experiment"] == "hom_dip"
    assert summary["generator"] == constants.GENERATOR
    assert summary["pass"] is True
    assert summary["parameters"] == {"alpha": {"real": 0.1, "imag": 0.2}, "photons": 4}
    assert summary["metadata"]["fit"] == {"harmonic": 2, "visibility": 1.0}
    assert summary["checks"][0]["name"] == "dip_minimum"
    assert summary["checks"][0]["passed"] is True
    assert summary["checks"][1]["passed"] is True


def test_failed_write_leaves_nothing(tmp_path):
    """Test that an interrupted write does not leave partial files behind"""
    result = ScanResult("broken", "x", [(0.0, {"y": object()})])
    with pytest.raises(TypeError):
        results.write_csv(result, tmp_path)
    assert not list(tmp_path.iterdir())


def test_max_deviation():
    """Test the largest absolute difference helper"""
    assert results.max_deviation([1.0, 2.0], [1.5, 1.0]) == pytest.approx(1.0)
    assert results.max_deviation([], []) == 0.0
