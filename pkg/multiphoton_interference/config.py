"""Run configuration from INI files and command-line overrides

A configuration file looks like::

    [run]
    experiment = hom_dip
    seed = 7
    output_dir = results
    formats = csv,json

    [parameters]
    transmissivity = 0.4

    [scan]
    parameter = delay
    start = -5
    stop = 5
    steps = 81

Values are read as ``int``, then ``float``, then ``complex``, then ``true``/``false``, and are
otherwise kept as strings.
"""
import dataclasses
import os
from pathlib import Path
from typing import Any
from typing import Dict
from typing import Mapping
from typing import Optional
from typing import Tuple

import iniconfig

from multiphoton_interference import constants
from multiphoton_interference import exceptions


ScanSpec = Tuple[str, float, float, int]


def default_output_dir() -> Path:
    """Output directory from the environment, falling back to the working directory"""
    return Path(os.environ.get(constants.OUTPUT_ENV_VAR) or Path.cwd())


@dataclasses.dataclass
class RunConfig:
    """Everything needed to run one experiment and write its results"""

    experiment: str
    parameters: Dict[str, Any] = dataclasses.field(default_factory=dict)
    scan: Optional[ScanSpec] = None
    seed: Optional[int] = None
    output_dir: Path = dataclasses.field(default_factory=default_output_dir)
    formats: Tuple[str, ...] = constants.OUTPUT_FORMATS
    threads: int = constants.DEFAULT_THREADS

    def __post_init__(self):
        if not self.experiment:
            raise exceptions.ConfigError("No experiment given")
        if self.scan is not None and self.scan[3] < 2:
            raise exceptions.ConfigError(f"Scan needs at least two steps, got {self.scan[3]}")
        unknown = [item for item in self.formats if item not in constants.OUTPUT_FORMATS]
        if unknown or not self.formats:
            raise exceptions.ConfigError(
                f"Output formats must be a non-empty subset of "
                f"{', '.join(constants.OUTPUT_FORMATS)}, got {', '.join(self.formats) or 'none'}"
            )
        if self.threads < 0:
            raise exceptions.ConfigError(f"Thread count cannot be negative, got {self.threads}")


def parse_value(text: str) -> Any:
    """Interpret a scalar from a configuration file or a ``--param`` flag"""
    text = text.strip()
    for kind in (int, float):
        try:
            return kind(text)
        except ValueError:
            pass
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        pass
    if text.lower() in ("true", "false"):
        return text.lower() == "true"
    return text


def parse_param(text: str) -> Tuple[str, Any]:
    """Split a ``key=value`` assignment

    :raises ConfigError: when the assignment has no ``=`` or no key
    """
    key, separator, value = text.partition("=")
    if not separator or not key.strip():
        raise exceptions.ConfigError(f"Parameter '{text}' must have the form key=value")
    return key.strip(), parse_value(value)


def parse_scan(text: str) -> ScanSpec:
    """Parse a ``parameter:start:stop:steps`` scan string

    :raises ConfigError: for a malformed scan string or fewer than two steps
    """
    fields = text.split(":")
    if len(fields) != 4:
        raise exceptions.ConfigError(f"Scan '{text}' must have the form parameter:start:stop:steps")
    name, start, stop, steps = fields
    try:
        scan = (name.strip(), float(start), float(stop), int(steps))
    except ValueError:
        raise exceptions.ConfigError(
            f"Scan '{text}' holds a non-numeric bound or step count"
        ) from None
    if scan[3] < 2:
        raise exceptions.ConfigError(f"Scan '{text}' needs at least two steps")
    return scan


def parse_formats(text: str) -> Tuple[str, ...]:
    """Split a comma separated list of output formats"""
    return tuple(item.strip().lower() for item in text.split(",") if item.strip())


def load_config(path: Path) -> Dict[str, Any]:
    """Read a configuration file into a mapping of :class:`RunConfig` fields

    Only fields present in the file are returned.

    :raises ConfigError: when the file cannot be read or parsed
    """
    try:
        ini = iniconfig.IniConfig(str(path))
    except iniconfig.ParseError as err:
        raise exceptions.ConfigError(f"Failed to parse configuration file {path}: {err}") from None
    except OSError as err:
        raise exceptions.ConfigError(f"Failed to read configuration file {path}: {err}") from None

    values: Dict[str, Any] = {}
    run: Mapping[str, str] = ini.sections.get("run", {})
    for key, value in run.items():
        if key == "experiment":
            values["experiment"] = value.strip()
        elif key == "seed":
            values["seed"] = _integer(key, value)
        elif key == "threads":
            values["threads"] = _integer(key, value)
        elif key == "output_dir":
            values["output_dir"] = Path(value.strip())
        elif key == "formats":
            values["formats"] = parse_formats(value)
        else:
            raise exceptions.ConfigError(f"Unknown key '{key}' in the [run] section of {path}")

    values["parameters"] = {
        key: parse_value(value) for key, value in ini.sections.get("parameters", {}).items()
    }

    if "scan" in ini.sections:
        scan = ini.sections["scan"]
        missing = [key for key in ("parameter", "start", "stop", "steps") if key not in scan]
        if missing:
            raise exceptions.ConfigError(
                f"The [scan] section of {path} is missing {', '.join(missing)}"
            )
        values["scan"] = parse_scan(
            ":".join(scan[key] for key in ("parameter", "start", "stop", "steps"))
        )
    return values


def _integer(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise exceptions.ConfigError(f"'{key}' must be an integer, got '{value}'") from None


def build_config(file_values: Mapping[str, Any], overrides: Mapping[str, Any]) -> RunConfig:
    """Merge file values with command-line overrides

    Overrides set to ``None`` are ignored; parameters are merged key by key.
    """
    merged = dict(file_values)
    parameters = dict(file_values.get("parameters", {}))
    parameters.update(overrides.get("parameters") or {})
    for key, value in overrides.items():
        if key != "parameters" and value is not None:
            merged[key] = value
    merged["parameters"] = parameters
    if not merged.get("experiment"):
        raise exceptions.ConfigError(
            "No experiment given; use --experiment or a configuration file"
        )
    return RunConfig(**merged)
