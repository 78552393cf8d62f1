# pylint: disable=missing-docstring
__title__ = "multiphoton-interference"
__summary__ = "Simulator for multi-photon interference and temporal distinguishability in linear optical networks"
__version__ = "0.1.0"
__url__ = "https://github.com/multiphoton-interference/multiphoton-interference/"
__license__ = "MIT"
__authors__ = ["multiphoton-interference developers"]
