"""Scan results, pass/fail checks and their on-disk formats"""
import csv
import dataclasses
import json
import math
import os
import tempfile
from pathlib import Path
from typing import Any
from typing import Dict
from typing import List
from typing import Mapping
from typing import Sequence
from typing import Tuple

from multiphoton_interference import constants
from multiphoton_interference import exceptions


Row = Tuple[float, Dict[str, float]]


@dataclasses.dataclass(frozen=True)
class Check:
    """Comparison of a computed value against its closed-form expectation"""

    name: str
    expected: float
    actual: float
    tolerance: float

    @property
    def passed(self) -> bool:  # pylint: disable=missing-function-docstring
        return bool(
            math.isfinite(self.actual) and abs(self.actual - self.expected) <= self.tolerance
        )

    def as_dict(self) -> Dict[str, Any]:  # pylint: disable=missing-function-docstring
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@dataclasses.dataclass
class ScanResult:
    """Labeled table of observables from one experiment sweep

    Rows are kept sorted by the scanned parameter and every row carries the same observables.
    """

    experiment_name: str
    parameter_name: str
    rows: List[Row]
    metadata: Dict[str, Any] = dataclasses.field(default_factory=dict)
    checks: List[Check] = dataclasses.field(default_factory=list)

    def __post_init__(self):
        self.rows = sorted(
            ((float(value), dict(observables)) for value, observables in self.rows),
            key=lambda row: row[0],
        )
        names = {tuple(observables) for _, observables in self.rows}
        if len(names) > 1:
            raise exceptions.ExperimentError(
                f"Rows of '{self.experiment_name}' disagree on their observables: {sorted(names)}"
            )

    @property
    def observables(self) -> Tuple[str, ...]:
        """Observable names in column order"""
        return tuple(self.rows[0][1]) if self.rows else ()

    @property
    def passed(self) -> bool:
        """Whether every check passed"""
        return all(check.passed for check in self.checks)

    def column(self, name: str) -> List[float]:
        """Values of one observable, or of the scanned parameter, in row order"""
        if name == self.parameter_name:
            return [value for value, _ in self.rows]
        return [observables[name] for _, observables in self.rows]


def _atomic_write(path: Path, writer):
    path.parent.mkdir(parents=True, exist_ok=True)
    handle, temporary = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(handle, "w", newline="", encoding="utf-8") as stream:
            writer(stream)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.unlink(temporary)
        raise


def write_csv(result: ScanResult, output_dir: Path) -> Path:
    """Write ``<experiment>.csv`` with round-trip float formatting

    :returns: Path of the written file
    """
    path = Path(output_dir) / f"{result.experiment_name}.csv"

    def _write(stream):
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow([result.parameter_name, *result.observables])
        for value, observables in result.rows:
            writer.writerow([repr(value), *(repr(float(item)) for item in observables.values())])

    _atomic_write(path, _write)
    return path


def read_csv(path: Path) -> Tuple[str, List[Row]]:
    """Parse a file written by :func:`write_csv`

    :returns: Tuple of the parameter name and the rows
    """
    with Path(path).open(newline="", encoding="utf-8") as stream:
        reader = csv.reader(stream)
        header = next(reader)
        rows = [
            (float(line[0]), {name: float(item) for name, item in zip(header[1:], line[1:])})
            for line in reader
        ]
    return header[0], rows


def summarize(result: ScanResult, parameters: Mapping[str, Any]) -> Dict[str, Any]:
    """Build the JSON-ready run summary"""
    return {
        "experiment": result.experiment_name,
        "generator": constants.GENERATOR,
        "parameters": {key: _jsonable(value) for key, value in parameters.items()},
        "pass": result.passed,
        "checks": [_jsonable(check.as_dict()) for check in result.checks],
        "metadata": {key: _jsonable(value) for key, value in result.metadata.items()},
    }


def write_summary(result: ScanResult, parameters: Mapping[str, Any], output_dir: Path) -> Path:
    """Write ``<experiment>.summary.json``

    :returns: Path of the written file
    """
    path = Path(output_dir) / f"{result.experiment_name}.summary.json"
    summary = summarize(result, parameters)
    _atomic_write(path, lambda stream: json.dump(summary, stream, indent=2, sort_keys=True))
    return path


def _jsonable(value: Any) -> Any:
    if isinstance(value, complex):
        return {"real": value.real, "imag": value.imag}
    if isinstance(value, Mapping):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if hasattr(value, "item"):
        return _jsonable(value.item())
    return value


def max_deviation(actual: Sequence[float], expected: Sequence[float]) -> float:
    """Largest absolute difference between two equally long sequences"""
    return max((abs(left - right) for left, right in zip(actual, expected)), default=0.0)
