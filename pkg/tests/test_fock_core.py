# pylint: disable=missing-module-docstring
import math

import pytest

from multiphoton_interference import constants
from multiphoton_interference import exceptions
from multiphoton_interference import fock_core
from multiphoton_interference.fock_core import FockVector


def test_basis_state():
    """Test that basis kets are normalized single terms"""
    state = fock_core.make_basis_state((2, 0, 1))
    assert state.normalized
    assert state.mode_count == 3
    assert state.amplitude((2, 0, 1)) == 1.0
    assert state.amplitude((1, 1, 1)) == 0.0
    assert state.photon_numbers() == (3,)


def test_invalid_occupations():
    """Test that malformed occupation vectors are rejected"""
    with pytest.raises(exceptions.InvalidOccupationError):
        fock_core.make_basis_state((1, -1))

    with pytest.raises(exceptions.InvalidOccupationError):
        fock_core.make_basis_state(())

    with pytest.raises(exceptions.ModeCountMismatchError):
        FockVector({(1, 0, 0): 1.0}, 2)

    with pytest.raises(exceptions.ShellOverflowError):
        fock_core.make_basis_state((constants.SHELL_LIMIT + 1, 0))


def test_normalized_flag_is_checked():
    """Test that a state cannot claim a unit norm it does not have"""
    with pytest.raises(exceptions.UnnormalizedStateError):
        FockVector({(1, 0): 0.5}, 2, normalized=True)

    state = FockVector({(1, 0): 0.6, (0, 1): 0.8j}, 2, normalized=True)
    assert fock_core.squared_norm(state) == pytest.approx(1.0)


def test_pruning():
    """Test that negligible amplitudes are dropped"""
    state = FockVector({(1, 0): 1.0, (0, 1): constants.PRUNE_THRESHOLD / 2}, 2)
    assert len(state) == 1


def test_ladder_operators():
    """Test the square-root factors of the creation and annihilation operators"""
    state = fock_core.make_basis_state((1, 0))

    raised = fock_core.apply_creation(state, 0)
    assert raised.amplitude((2, 0)) == pytest.approx(math.sqrt(2.0))
    assert not raised.normalized

    lowered = fock_core.apply_annihilation(raised, 0)
    assert lowered.amplitude((1, 0)) == pytest.approx(2.0)

    assert len(fock_core.apply_annihilation(state, 1)) == 0

    with pytest.raises(exceptions.InvalidModeError):
        fock_core.apply_creation(state, 2)


def test_inner_product():
    """Test that the inner product is conjugate-linear in its first argument"""
    state = FockVector({(1, 0): 0.6, (0, 1): 0.8}, 2, normalized=True)
    rotated = fock_core.scale(state, 1j)

    assert rotated.normalized
    assert fock_core.inner_product(rotated, state) == pytest.approx(-1j)
    assert fock_core.inner_product(state, rotated) == pytest.approx(1j)
    assert fock_core.inner_product(state, fock_core.make_basis_state((2, 0))) == 0

    with pytest.raises(exceptions.ModeCountMismatchError):
        fock_core.inner_product(state, fock_core.make_basis_state((1, 0, 0)))


def test_sum_and_normalize():
    """Test that sums are unnormalized until explicitly normalized"""
    total = fock_core.add(fock_core.make_basis_state((1, 0)), fock_core.make_basis_state((0, 1)))
    assert not total.normalized
    assert fock_core.squared_norm(total) == pytest.approx(2.0)

    normalized = fock_core.normalize(total)
    assert normalized.normalized
    assert normalized.amplitude((1, 0)) == pytest.approx(1.0 / math.sqrt(2.0))

    with pytest.raises(exceptions.StateError):
        fock_core.normalize(FockVector({}, 2))


def test_outcome_probability():
    """Test that outcome probabilities require a normalized state"""
    state = FockVector({(1, 0): 0.6, (0, 1): 0.8}, 2, normalized=True)
    assert fock_core.outcome_probability(state, (0, 1)) == pytest.approx(0.64)
    assert fock_core.outcome_probability(state, (2, 0)) == 0.0

    with pytest.raises(exceptions.UnnormalizedStateError):
        fock_core.outcome_probability(fock_core.scale(state, 2.0), (0, 1))

    with pytest.raises(exceptions.ModeCountMismatchError):
        fock_core.outcome_probability(state, (0, 1, 0))


def test_tensor():
    """Test that tensor products concatenate modes and multiply amplitudes"""
    first = FockVector({(1,): 0.6, (0,): 0.8}, 1, normalized=True)
    second = fock_core.make_basis_state((0, 2))
    product = fock_core.tensor(first, second)

    assert product.mode_count == 3
    assert product.normalized
    assert product.amplitude((1, 0, 2)) == pytest.approx(0.6)
    assert product.amplitude((0, 0, 2)) == pytest.approx(0.8)


def test_tensor_of_two_photon_noon_states():
    """Test the four-mode product of two ``(|2,0> - |0,2>) / sqrt 2`` states"""
    noon = FockVector({(2, 0): 1.0 / math.sqrt(2.0), (0, 2): -1.0 / math.sqrt(2.0)}, 2, True)
    product = fock_core.tensor(noon, noon)

    assert product.mode_count == 4
    assert product.normalized
    assert len(product) == 4
    assert product.amplitude((2, 0, 2, 0)) == pytest.approx(0.5)
    assert product.amplitude((0, 2, 0, 2)) == pytest.approx(0.5)
    assert product.amplitude((2, 0, 0, 2)) == pytest.approx(-0.5)
    assert product.amplitude((0, 2, 2, 0)) == pytest.approx(-0.5)
    assert fock_core.outcome_probability(product, (2, 0, 2, 0)) == pytest.approx(0.25)


def test_photon_shell():
    """Test that the shell enumerates every distribution of the photons exactly once"""
    shell = list(fock_core.photon_shell(3, 4))
    assert len(shell) == math.comb(3 + 4 - 1, 4)
    assert len(set(shell)) == len(shell)
    assert all(sum(item) == 4 for item in shell)


def test_mean_photon_number():
    """Test the number expectation of a superposition"""
    state = FockVector({(2, 0): 1.0, (0, 2): 1.0}, 2)
    assert fock_core.mean_photon_number(state, 0) == pytest.approx(1.0)
    assert fock_core.mean_photon_number(FockVector({}, 2), 0) == 0.0


def test_reduce_modes():
    """Test that only modes in a definite occupation can be dropped"""
    state = FockVector({(1, 0, 1): 0.6, (0, 1, 1): 0.8}, 3, normalized=True)
    reduced = fock_core.reduce_modes(state, (0, 1))
    assert reduced.mode_count == 2
    assert reduced.normalized
    assert reduced.amplitude((0, 1)) == pytest.approx(0.8)

    with pytest.raises(exceptions.StateError):
        fock_core.reduce_modes(state, (0, 2))
