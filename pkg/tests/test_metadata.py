"""Ensure that the pyproject and module metadata never drift out of sync

The next best thing to having one source of truth is having a way to ensure all of your
sources of truth agree with each other.
"""
from pathlib import Path

import toml

from multiphoton_interference import __about__
from multiphoton_interference import constants


def _pyproject():
    with (Path(__file__).resolve().parent / ".." / "pyproject.toml").open() as infile:
        return toml.load(infile, _dict=dict)


def test_metadata():
    """Test that module metadata matches pyproject poetry metadata"""
    poetry = _pyproject()["tool"]["poetry"]

    assert poetry["name"] == __about__.__title__
    assert poetry["version"] == __about__.__version__
    assert poetry["license"] == __about__.__license__
    assert poetry["description"] == __about__.__summary__
    assert poetry["repository"] == __about__.__url__
    assert sorted(poetry["authors"]) == sorted(__about__.__authors__)


def test_entry_point():
    """Test that the console script points at the CLI entry point"""
    scripts = _pyproject()["tool"]["poetry"]["scripts"]
    assert scripts["multiphoton"] == "multiphoton_interference.cli:main"


def test_generator_identifier():
    """Test that summary files identify the package version that wrote them"""
    assert __about__.__title__ in constants.GENERATOR
    assert __about__.__version__ in constants.GENERATOR
