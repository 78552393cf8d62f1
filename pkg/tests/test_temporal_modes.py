# pylint: disable=missing-module-docstring, redefined-outer-name, unused-import
import math

import numpy
import pytest
import scipy.integrate

from .fixtures import identical_pair
from .fixtures import naive_permanent
from .fixtures import orthogonal_pair
from .fixtures import random_gram
from .fixtures import random_network
from multiphoton_interference import constants
from multiphoton_interference import exceptions
from multiphoton_interference import fock_core
from multiphoton_interference import linear_optics
from multiphoton_interference import temporal_modes
from multiphoton_interference.linear_optics import SplitterElement
from multiphoton_interference.temporal_modes import DistinguishabilityScenario
from multiphoton_interference.temporal_modes import GaussianPacket
from multiphoton_interference.temporal_modes import JointAmplitude
from multiphoton_interference.temporal_modes import PacketSet


def test_packet_validation():
    """Test that packets need a positive bandwidth"""
    with pytest.raises(exceptions.InvalidBandwidthError):
        GaussianPacket(bandwidth=0.0)

    with pytest.raises(exceptions.InvalidBandwidthError):
        GaussianPacket(bandwidth=-1.0)


@pytest.mark.parametrize(
    "first,second",
    [
        (GaussianPacket(0.0, 1.0, 0.0), GaussianPacket(0.0, 1.0, 0.7)),
        (GaussianPacket(0.3, 1.0, 0.0), GaussianPacket(-0.2, 1.5, 1.2)),
        (GaussianPacket(1.0, 0.5, -0.4), GaussianPacket(1.0, 0.8, 0.4)),
    ],
)
def test_overlap_matches_quadrature(first, second):
    """Test the closed-form overlap against numerical integration"""
    def _integrand(omega, part):
        value = numpy.conj(first.amplitude(omega)) * second.amplitude(omega)
        return float(value.real if part == "real" else value.imag)

    parts = [
        scipy.integrate.quad(
            _integrand, -30.0, 30.0, args=(part,), limit=200, epsabs=1e-12, epsrel=1e-12
        )[0]
        for part in ("real", "imag")
    ]
    assert temporal_modes.packet_overlap(first, second) == pytest.approx(
        complex(*parts), abs=1e-8
    )


def test_delayed_overlap():
    """Test that delaying one of two identical packets gives ``|s|^2 = exp(-sigma^2 tau^2)``"""
    for bandwidth in (0.5, 1.0, 2.0):
        overlap = temporal_modes.packet_overlap(
            GaussianPacket(0.0, bandwidth, 0.0), GaussianPacket(0.0, bandwidth, 0.8)
        )
        assert abs(overlap) ** 2 == pytest.approx(math.exp(-((bandwidth * 0.8) ** 2)))


@pytest.mark.parametrize("size", range(0, 7))
def test_permanent_matches_permutation_sum(size):
    """Test Ryser's formula against the sum over permutations"""
    rng = numpy.random.default_rng(size)
    matrix = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    assert temporal_modes.permanent(matrix) == pytest.approx(naive_permanent(matrix), rel=1e-10)


def test_permanent_special_matrices():
    """Test the permanents of the all-ones and identity matrices"""
    assert temporal_modes.permanent(numpy.ones((5, 5))) == pytest.approx(120.0)
    assert temporal_modes.permanent(numpy.eye(5)) == pytest.approx(1.0)

    with pytest.raises(exceptions.MatrixShapeError):
        temporal_modes.permanent(numpy.ones((2, 3)))

    with pytest.raises(exceptions.MatrixShapeError):
        temporal_modes.permanent(numpy.ones((constants.PERMANENT_LIMIT + 1,) * 2))


def test_normalization_constant():
    """Test that the normalization runs from 1 for orthogonal to N! for identical photons"""
    identical = PacketSet.from_scenario(DistinguishabilityScenario.identical(4))
    orthogonal = PacketSet.from_scenario(DistinguishabilityScenario.orthogonal(4))
    mixed = PacketSet.from_scenario(DistinguishabilityScenario(((0, 2), (1,), (3,))))

    assert temporal_modes.normalization_constant(identical) == pytest.approx(24.0)
    assert temporal_modes.normalization_constant(orthogonal) == pytest.approx(1.0)
    assert temporal_modes.normalization_constant(mixed) == pytest.approx(2.0)


def test_scenario_validation():
    """Test that scenario blocks must partition the photons"""
    with pytest.raises(exceptions.PacketError):
        DistinguishabilityScenario(((0, 1), (1, 2)))

    with pytest.raises(exceptions.PacketError):
        DistinguishabilityScenario(((0,), (2,)))


def test_packet_set_validation():
    """Test that malformed Gram matrices are rejected"""
    with pytest.raises(exceptions.MatrixShapeError):
        PacketSet((), numpy.ones((2, 3)))

    with pytest.raises(exceptions.PacketError):
        PacketSet((), numpy.array([[1.0, 0.5], [0.5, 0.9]]))

    with pytest.raises(exceptions.PacketError):
        PacketSet((), numpy.array([[1.0, 0.5], [0.2, 1.0]]))

    packets = PacketSet.from_packets([GaussianPacket(), GaussianPacket(delay=1.0)])
    assert packets.size == 2
    with pytest.raises(ValueError):
        packets.gram[0, 1] = 0.0


@pytest.mark.parametrize("size,rank,seed", [(3, 3, 1), (4, 2, 2), (5, 3, 3), (4, 1, 4)])
def test_embedding_reproduces_gram(size, rank, seed):
    """Test that the internal-mode expansion reproduces the overlaps and the permanent"""
    gram = random_gram(size, rank, seed)
    embedding = temporal_modes.embed_internal_modes(PacketSet((), gram))

    assert embedding.internal_modes == rank
    coefficients = embedding.coefficients
    assert numpy.allclose(coefficients.conj() @ coefficients.T, gram, atol=1e-10)

    bunched = embedding.state([0] * size, 1)
    assert fock_core.squared_norm(bunched) == pytest.approx(
        temporal_modes.permanent(gram).real, rel=1e-9
    )

    spread = embedding.state(list(range(size)), size)
    assert fock_core.squared_norm(spread) == pytest.approx(1.0, rel=1e-9)


def test_embedding_rejects_indefinite_gram():
    """Test that a Gram matrix with a negative eigenvalue is refused"""
    gram = numpy.array([[1.0, 0.9, 0.9], [0.9, 1.0, -0.9], [0.9, -0.9, 1.0]])
    with pytest.raises(exceptions.IndefiniteGramError):
        temporal_modes.embed_internal_modes(PacketSet((), gram))


def test_embedding_state_checks_inputs():
    """Test that every photon needs a spatial input mode"""
    embedding = temporal_modes.embed_internal_modes(
        PacketSet.from_scenario(DistinguishabilityScenario.identical(2))
    )
    with pytest.raises(exceptions.ModeCountMismatchError):
        embedding.state([0], 2)


def test_hom_limits(identical_pair, orthogonal_pair):
    """Test the two extremes of the two-photon coincidence on a balanced coupler"""
    network = [SplitterElement(0.5)]
    assert temporal_modes.coincidence_with_distinguishability(
        identical_pair, network, (1, 1)
    ) == pytest.approx(0.0, abs=1e-15)
    assert temporal_modes.coincidence_with_distinguishability(
        orthogonal_pair, network, (1, 1)
    ) == pytest.approx(0.5)


@pytest.mark.parametrize("delay", [0.0, 0.4, 1.0, 2.5])
def test_partial_distinguishability(delay):
    """Test that the coincidence interpolates with the squared overlap"""
    packets = PacketSet.from_packets([GaussianPacket(), GaussianPacket(delay=delay)])
    overlap_squared = math.exp(-(delay ** 2))
    coincidence = temporal_modes.coincidence_with_distinguishability(
        packets, [SplitterElement(0.3)], (1, 1)
    )
    assert coincidence == pytest.approx(0.09 + 0.49 - 2.0 * 0.21 * overlap_squared, abs=1e-12)


@pytest.mark.parametrize("seed", [3, 5, 8])
def test_random_packet_grams_are_positive(seed):
    """Test that overlaps of arbitrary Gaussian packets form an embeddable Gram matrix"""
    rng = numpy.random.default_rng(seed)
    packets = PacketSet.from_packets(
        [
            GaussianPacket(
                float(rng.uniform(-1.0, 1.0)),
                float(rng.uniform(0.3, 2.0)),
                float(rng.uniform(-2.0, 2.0)),
            )
            for _ in range(5)
        ]
    )
    assert numpy.linalg.eigvalsh(packets.gram).min() >= constants.GRAM_EIGENVALUE_FLOOR
    assert temporal_modes.normalization_constant(packets) > 0.0

    embedding = temporal_modes.embed_internal_modes(packets)
    coefficients = embedding.coefficients
    assert numpy.allclose(coefficients.conj() @ coefficients.T, packets.gram, atol=1e-8)


@pytest.mark.parametrize("seed", [5, 12, 21])
@pytest.mark.parametrize("input_modes", [(0, 1, 2), (0, 0, 1), (2, 2, 2)])
def test_limits_on_random_networks(seed, input_modes):
    """Test that identical packets follow the Fock engine and orthogonal ones the classical one"""
    network = random_network(3, 5, seed)
    occupation = tuple(input_modes.count(mode) for mode in range(3))
    pure = linear_optics.apply_network(fock_core.make_basis_state(occupation), network)
    classical = linear_optics.classical_distribution(occupation, network)
    identical = PacketSet.from_scenario(DistinguishabilityScenario.identical(3))
    orthogonal = PacketSet.from_scenario(DistinguishabilityScenario.orthogonal(3))

    for pattern in fock_core.photon_shell(3, 3):
        assert temporal_modes.coincidence_with_distinguishability(
            identical, network, pattern, input_modes=input_modes, mode_count=3
        ) == pytest.approx(fock_core.outcome_probability(pure, pattern), abs=1e-10)
        assert temporal_modes.coincidence_with_distinguishability(
            orthogonal, network, pattern, input_modes=input_modes, mode_count=3
        ) == pytest.approx(classical.get(pattern, 0.0), abs=1e-10)


def test_coincidence_checks():
    """Test the photon limit and the pattern length of the coincidence engine"""
    with pytest.raises(exceptions.ShellOverflowError):
        temporal_modes.coincidence_with_distinguishability(
            PacketSet.from_scenario(
                DistinguishabilityScenario.identical(constants.DISTINGUISHABILITY_LIMIT + 1)
            ),
            [],
            (1,) * (constants.DISTINGUISHABILITY_LIMIT + 1),
        )

    with pytest.raises(exceptions.ModeCountMismatchError):
        temporal_modes.coincidence_with_distinguishability(
            PacketSet.from_scenario(DistinguishabilityScenario.identical(2)),
            [SplitterElement(0.5)],
            (1, 1, 0),
        )


@pytest.mark.parametrize("photons,overlapping", [(2, 0), (2, 1), (2, 2), (3, 1), (3, 2)])
def test_asymmetric_visibility(photons, overlapping):
    """Test the dip visibility ``m / N`` of ``|N, 1>`` on a coupler with ``R = 1 / (N + 1)``"""
    network = [SplitterElement(photons / (photons + 1.0))]
    far = (constants.ORTHOGONAL_DELAY,) * (photons - overlapping)

    def _coincidence(delay):
        packets = PacketSet.from_packets(
            [GaussianPacket(delay=delay)]
            + [GaussianPacket(delay=item) for item in (0.0,) * overlapping + far]
        )
        return temporal_modes.coincidence_with_distinguishability(
            packets, network, (photons, 1), input_modes=(1,) + (0,) * photons, mode_count=2
        )

    baseline = _coincidence(-constants.ORTHOGONAL_DELAY)
    assert (baseline - _coincidence(0.0)) / baseline == pytest.approx(
        overlapping / photons, abs=1e-9
    )


def _gaussian_source(bandwidth):
    packet = GaussianPacket(0.0, bandwidth, 0.0)
    return lambda omega1, omega2: packet.amplitude(omega1) * packet.amplitude(omega2)


def test_pair_quantities_of_separable_amplitude():
    """Test that a product amplitude has ``E = A = 1``"""
    axis = temporal_modes.frequency_axis(0.0, 1.0, 96, 8.0)
    joint = JointAmplitude.from_function(_gaussian_source(1.0), axis, axis)
    normalization, exchange = temporal_modes.pair_quantities(joint)
    assert normalization == pytest.approx(1.0, abs=1e-9)
    assert exchange == pytest.approx(1.0, abs=1e-9)


def test_pair_quantities_of_correlated_amplitude():
    """Test ``E`` of a frequency-correlated amplitude against a direct four-fold sum"""
    axis = temporal_modes.frequency_axis(0.0, 1.0, 24, 6.0)

    def _correlated(omega1, omega2):
        return numpy.exp(-((omega1 + omega2) ** 2) / 2.0 - (omega1 - omega2) ** 2 / 8.0)

    joint = JointAmplitude.from_function(_correlated, axis, axis)
    normalization, exchange = temporal_modes.pair_quantities(joint, check_convergence=False)

    grid = joint.grid
    step = joint.step1
    direct = numpy.einsum("ab,cd,cb,ad->", grid, grid, grid.conj(), grid.conj()) * step ** 4
    assert exchange == pytest.approx(direct.real, rel=1e-10)
    assert normalization == pytest.approx(
        (numpy.sum(numpy.abs(grid) ** 2) * step ** 2) ** 2, rel=1e-12
    )
    assert 0.0 < exchange < normalization


def test_pair_quantities_convergence():
    """Test that an under-resolved grid is reported"""
    axis = temporal_modes.frequency_axis(0.0, 1.0, 5, 8.0)
    joint = JointAmplitude.from_function(_gaussian_source(1.0), axis, axis)
    with pytest.raises(exceptions.ResolutionError):
        temporal_modes.pair_quantities(joint)

    with pytest.raises(exceptions.ResolutionError):
        JointAmplitude(joint.grid, joint.omega1, joint.omega2).refined()


def test_hom_visibility():
    """Test the exchange visibility of delayed and identical photons"""
    reference = GaussianPacket()
    assert temporal_modes.hom_visibility(
        JointAmplitude.separable(reference, reference, 128, 8.0)
    ) == pytest.approx(1.0, abs=1e-9)

    delayed = GaussianPacket(delay=1.2)
    assert temporal_modes.hom_visibility(
        JointAmplitude.separable(reference, delayed, 128, 8.0)
    ) == pytest.approx(math.exp(-(1.2 ** 2)), abs=1e-6)


def test_hom_visibility_needs_shared_axis():
    """Test that the exchange visibility refuses mismatched axes"""
    joint = JointAmplitude.from_function(
        _gaussian_source(1.0), numpy.linspace(-5.0, 5.0, 32), numpy.linspace(-4.0, 4.0, 32)
    )
    with pytest.raises(exceptions.MatrixShapeError):
        temporal_modes.hom_visibility(joint)


def test_four_photon_pair_quantities():
    """Test that two delayed pairs give ``E / A = exp(-sigma^2 tau^2)``"""
    reference = GaussianPacket()
    delayed = GaussianPacket(delay=0.9)
    normalization, exchange = temporal_modes.four_photon_pair_quantities(
        JointAmplitude.separable(reference, reference, 128, 8.0),
        JointAmplitude.separable(delayed, delayed, 128, 8.0),
    )
    assert exchange / normalization == pytest.approx(math.exp(-(0.9 ** 2)), abs=1e-6)

    with pytest.raises(exceptions.MatrixShapeError):
        temporal_modes.four_photon_pair_quantities(
            JointAmplitude.separable(reference, reference, 64, 8.0),
            JointAmplitude.separable(reference, reference, 128, 8.0),
        )
