# pylint: disable=missing-module-docstring, missing-function-docstring
import itertools
import math
from pathlib import Path

import numpy
import pytest

from multiphoton_interference import constants
from multiphoton_interference.linear_optics import Network
from multiphoton_interference.linear_optics import PhaseElement
from multiphoton_interference.linear_optics import SplitterElement
from multiphoton_interference.temporal_modes import DistinguishabilityScenario
from multiphoton_interference.temporal_modes import PacketSet


def naive_permanent(matrix) -> complex:
    """Permanent from the sum over every permutation, for checking the fast kernel"""
    matrix = numpy.asarray(matrix, dtype=complex)
    size = matrix.shape[0]
    return complex(
        sum(
            math.prod(matrix[row, column] for row, column in enumerate(permutation))
            for permutation in itertools.permutations(range(size))
        )
    )


def random_gram(size: int, rank: int, seed: int) -> numpy.ndarray:
    """Gram matrix of ``size`` random unit vectors spanning ``rank`` dimensions"""
    rng = numpy.random.default_rng(seed)
    vectors = rng.normal(size=(size, rank)) + 1j * rng.normal(size=(size, rank))
    vectors /= numpy.linalg.norm(vectors, axis=1, keepdims=True)
    return vectors.conj() @ vectors.T


def random_network(mode_count: int, elements: int, seed: int) -> Network:
    """Couplers on random mode pairs, each followed by a random phase on one of its modes"""
    rng = numpy.random.default_rng(seed)
    network = []
    for _ in range(elements):
        pair = tuple(int(mode) for mode in rng.choice(mode_count, size=2, replace=False))
        network.append(SplitterElement(float(rng.uniform(0.1, 0.9)), pair))
        network.append(PhaseElement(pair[1], float(rng.uniform(0.0, 2.0 * math.pi))))
    return network


@pytest.fixture
def output_dir(tmp_path, monkeypatch) -> Path:
    path = tmp_path / "results"
    monkeypatch.setenv(constants.OUTPUT_ENV_VAR, str(path))
    return path


@pytest.fixture
def identical_pair() -> PacketSet:
    return PacketSet.from_scenario(DistinguishabilityScenario.identical(2))


@pytest.fixture
def orthogonal_pair() -> PacketSet:
    return PacketSet.from_scenario(DistinguishabilityScenario.orthogonal(2))
