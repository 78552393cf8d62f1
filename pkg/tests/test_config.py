# pylint: disable=missing-module-docstring, redefined-outer-name, unused-import
from pathlib import Path

import pytest

from .fixtures import output_dir
from multiphoton_interference import config
from multiphoton_interference import constants
from multiphoton_interference import exceptions


def test_parse_value():
    """Test the order in which scalar types are tried"""
    assert config.parse_value("3") == 3
    assert isinstance(config.parse_value("3"), int)
    assert config.parse_value(" 0.25 ") == 0.25
    assert config.parse_value("1+2j") == 1 + 2j
    assert config.parse_value("True") is True
    assert config.parse_value("false") is False
    assert config.parse_value("noon_projection") == "noon_projection"
    assert config.parse_value("1, 1, 1") == "1, 1, 1"


def test_parse_param():
    """Test ``key=value`` assignments"""
    assert config.parse_param("transmissivity=0.4") == ("transmissivity", 0.4)
    assert config.parse_param(" scheme = asymmetric_bs") == ("scheme", "asymmetric_bs")

    for text in ("transmissivity", "=0.4"):
        with pytest.raises(exceptions.ConfigError):
            config.parse_param(text)


def test_parse_scan():
    """Test scan strings and their errors"""
    assert config.parse_scan("delay:-5:5:81") == ("delay", -5.0, 5.0, 81)

    for text in ("delay:-5:5", "delay:low:5:3", "delay:0:1:1", "delay:0:1:2.5"):
        with pytest.raises(exceptions.ConfigError):
            config.parse_scan(text)


def test_load_config(tmp_path):
    """Test reading every section of a configuration file"""
    path = tmp_path / "run.ini"
    path.write_text(
        "[run]\n"
        "experiment = hom_dip\n"
        "seed = 7\n"
        "threads = 0\n"
        "output_dir = out\n"
        "formats = csv\n"
        "\n"
        "[parameters]\n"
        "transmissivity = 0.4\n"
        "\n"
        "[scan]\n"
        "parameter = delay\n"
        "start = -2\n"
        "stop = 2\n"
        "steps = 5\n"
    )
    values = config.load_config(path)
    assert values == {
        "experiment": "hom_dip",
        "seed": 7,
        "threads": 0,
        "output_dir": Path("out"),
        "formats": ("csv",),
        "parameters": {"transmissivity": 0.4},
        "scan": ("delay", -2.0, 2.0, 5),
    }


def test_load_config_errors(tmp_path):
    """Test that unreadable and malformed files are reported as configuration errors"""
    with pytest.raises(exceptions.ConfigError):
        config.load_config(tmp_path / "missing.ini")

    orphan = tmp_path / "orphan.ini"
    orphan.write_text("experiment = hom_dip\n")
    with pytest.raises(exceptions.ConfigError):
        config.load_config(orphan)

    unknown = tmp_path / "unknown.ini"
    unknown.write_text("[run]\nexperiment = hom_dip\ncolour = blue\n")
    with pytest.raises(exceptions.ConfigError):
        config.load_config(unknown)

    seed = tmp_path / "seed.ini"
    seed.write_text("[run]\nseed = abc\n")
    with pytest.raises(exceptions.ConfigError):
        config.load_config(seed)

    scan = tmp_path / "scan.ini"
    scan.write_text("[scan]\nparameter = delay\nstart = 0\n")
    with pytest.raises(exceptions.ConfigError):
        config.load_config(scan)


def test_build_config(output_dir):
    """Test that overrides win and parameters merge key by key"""
    run_config = config.build_config(
        {
            "experiment": "hom_dip",
            "seed": 1,
            "parameters": {"transmissivity": 0.4, "bandwidth": 2.0},
        },
        {
            "experiment": None,
            "seed": 5,
            "parameters": {"transmissivity": 0.3},
            "threads": None,
        },
    )
    assert run_config.experiment == "hom_dip"
    assert run_config.seed == 5
    assert run_config.parameters == {"transmissivity": 0.3, "bandwidth": 2.0}
    assert run_config.threads == constants.DEFAULT_THREADS
    assert run_config.output_dir == output_dir
    assert run_config.formats == constants.OUTPUT_FORMATS


def test_run_config_validation():
    """Test the checks applied to a complete run configuration"""
    with pytest.raises(exceptions.ConfigError):
        config.build_config({}, {"experiment": None})

    with pytest.raises(exceptions.ConfigError):
        config.RunConfig("hom_dip", formats=("csv", "xml"))

    with pytest.raises(exceptions.ConfigError):
        config.RunConfig("hom_dip", formats=())

    with pytest.raises(exceptions.ConfigError):
        config.RunConfig("hom_dip", threads=-1)

    with pytest.raises(exceptions.ConfigError):
        config.RunConfig("hom_dip", scan=("delay", 0.0, 1.0, 1))


def test_default_output_dir(monkeypatch, tmp_path):
    """Test that the output directory falls back to the working directory"""
    monkeypatch.delenv(constants.OUTPUT_ENV_VAR, raising=False)
    monkeypatch.chdir(tmp_path)
    assert config.default_output_dir().resolve() == tmp_path.resolve()
