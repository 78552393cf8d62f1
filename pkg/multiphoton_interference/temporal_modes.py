"""Photons as spectral wave packets and the interference of partially distinguishable photons

Each photon is described by a unit-normalized spectral amplitude. The pairwise overlaps of a
set of photons form a Gram matrix whose permanent is the permutation normalization of the
product state. Exact interference probabilities for partially distinguishable photons are
computed by orthogonalizing the packets into a small number of internal modes, embedding
the photons in a register of ``spatial * internal`` modes and evolving that register with the
ordinary Fock machinery. Detectors never resolve internal modes.
"""
import cmath
import dataclasses
import math
from typing import Callable
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy
import scipy.linalg
import scipy.linalg.lapack

from multiphoton_interference import constants
from multiphoton_interference import exceptions
from multiphoton_interference import fock_core
from multiphoton_interference import linear_optics
from multiphoton_interference import logger
from multiphoton_interference.fock_core import FockVector


@dataclasses.dataclass(frozen=True)
class GaussianPacket:
    """Single-photon Gaussian spectral amplitude

    ``phi(w) = (2 pi sigma^2)^(-1/4) exp(-(w - w0)^2 / 4 sigma^2) exp(i w tau)``

    :param center_frequency: Center angular frequency ``w0``
    :param bandwidth: Amplitude bandwidth ``sigma``, strictly positive
    :param delay: Arrival delay ``tau`` in inverse frequency units
    """

    center_frequency: float = 0.0
    bandwidth: float = 1.0
    delay: float = 0.0

    def __post_init__(self):
        if not self.bandwidth > 0.0:
            raise exceptions.InvalidBandwidthError(
                f"Packet bandwidth must be positive, got {self.bandwidth!r}"
            )

    def amplitude(self, omega) -> numpy.ndarray:
        """Evaluate the spectral amplitude on an array of frequencies"""
        omega = numpy.asarray(omega, dtype=float)
        return (
            (2.0 * math.pi * self.bandwidth ** 2) ** -0.25
            * numpy.exp(-((omega - self.center_frequency) ** 2) / (4.0 * self.bandwidth ** 2))
            * numpy.exp(1j * omega * self.delay)
        )


def packet_overlap(first: GaussianPacket, second: GaussianPacket) -> complex:
    """Closed-form overlap ``<first|second>`` of two Gaussian packets"""
    curvature = 0.25 / first.bandwidth ** 2 + 0.25 / second.bandwidth ** 2
    linear = (
        first.center_frequency * 0.25 / first.bandwidth ** 2
        + second.center_frequency * 0.25 / second.bandwidth ** 2
    )
    offset = (
        first.center_frequency ** 2 * 0.25 / first.bandwidth ** 2
        + second.center_frequency ** 2 * 0.25 / second.bandwidth ** 2
    )
    shift = 2.0 * linear + 1j * (second.delay - first.delay)
    prefactor = (
        (2.0 * math.pi * first.bandwidth ** 2) ** -0.25
        * (2.0 * math.pi * second.bandwidth ** 2) ** -0.25
        * math.sqrt(math.pi / curvature)
    )
    return prefactor * cmath.exp(shift ** 2 / (4.0 * curvature) - offset)


def permanent(matrix) -> complex:
    """Permanent of a square matrix by Ryser's formula in Gray-code order

    Each step of the Gray code adds or removes a single column from the running row sums, so
    the cost is ``O(2^n n)``.

    :raises MatrixShapeError: for a non-square matrix or one larger than the supported limit
    """
    matrix = numpy.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise exceptions.MatrixShapeError(
            f"Permanent needs a square matrix, got shape {matrix.shape}"
        )
    size = matrix.shape[0]
    if size > constants.PERMANENT_LIMIT:
        raise exceptions.MatrixShapeError(
            f"Permanent of a {size}x{size} matrix exceeds the limit of {constants.PERMANENT_LIMIT}"
        )
    if size == 0:
        return 1.0 + 0j

    row_sums = numpy.zeros(size, dtype=complex)
    total = 0j
    previous = 0
    for step in range(1, 2 ** size):
        gray = step ^ (step >> 1)
        column = (gray ^ previous).bit_length() - 1
        if gray & (1 << column):
            row_sums += matrix[:, column]
        else:
            row_sums -= matrix[:, column]
        previous = gray
        sign = -1.0 if bin(gray).count("1") % 2 else 1.0
        total += sign * numpy.prod(row_sums)
    return complex((-1.0) ** size * total)


@dataclasses.dataclass(frozen=True)
class DistinguishabilityScenario:
    """Partition of photons into blocks of identical packets

    Photons within a block share one packet; different blocks are exactly orthogonal. A single
    block of ``N`` photons is the fully indistinguishable case, ``N`` singleton blocks the fully
    distinguishable one.
    """

    groups: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        photons = sorted(index for group in self.groups for index in group)
        if photons != list(range(len(photons))):
            raise exceptions.PacketError(
                f"Photon groups {self.groups} must be disjoint and cover every photon"
            )

    @property
    def photon_count(self) -> int:  # pylint: disable=missing-function-docstring
        return sum(len(group) for group in self.groups)

    @classmethod
    def identical(cls, photons: int) -> "DistinguishabilityScenario":
        """All photons in a single block"""
        return cls((tuple(range(photons)),))

    @classmethod
    def orthogonal(cls, photons: int) -> "DistinguishabilityScenario":
        """Every photon in its own block"""
        return cls(tuple((index,) for index in range(photons)))


@dataclasses.dataclass(frozen=True, eq=False)
class PacketSet:
    """Ordered photons with their pairwise overlap matrix

    :param packets: Packets the Gram matrix was built from; empty when the matrix was given
                    directly or built from a :class:`DistinguishabilityScenario`
    :param gram: Hermitian matrix of overlaps ``<phi_i|phi_j>`` with unit diagonal
    """

    packets: Tuple[GaussianPacket, ...]
    gram: numpy.ndarray

    def __post_init__(self):
        gram = numpy.array(self.gram, dtype=complex)
        if gram.ndim != 2 or gram.shape[0] != gram.shape[1]:
            raise exceptions.MatrixShapeError(f"Gram matrix has shape {gram.shape}")
        if self.packets and len(self.packets) != gram.shape[0]:
            raise exceptions.MatrixShapeError(
                f"Gram matrix of size {gram.shape[0]} does not match {len(self.packets)} packets"
            )
        if not numpy.allclose(numpy.diag(gram), 1.0, atol=constants.VISIBILITY_IMAGINARY_TOLERANCE):
            raise exceptions.PacketError("Gram matrix must have a unit diagonal")
        if not numpy.allclose(gram, gram.conj().T, atol=constants.VISIBILITY_IMAGINARY_TOLERANCE):
            raise exceptions.PacketError("Gram matrix must be Hermitian")
        gram.setflags(write=False)
        object.__setattr__(self, "gram", gram)

    @property
    def size(self) -> int:
        """Number of photons"""
        return self.gram.shape[0]

    @classmethod
    def from_packets(cls, packets: Sequence[GaussianPacket]) -> "PacketSet":
        """Build the Gram matrix from closed-form packet overlaps"""
        packets = tuple(packets)
        gram = numpy.array(
            [[packet_overlap(first, second) for second in packets] for first in packets],
            dtype=complex,
        )
        return cls(packets, gram)

    @classmethod
    def from_scenario(cls, scenario: DistinguishabilityScenario) -> "PacketSet":
        """Exact block Gram matrix of a distinguishability scenario"""
        gram = numpy.zeros((scenario.photon_count, scenario.photon_count), dtype=complex)
        for group in scenario.groups:
            for first in group:
                for second in group:
                    gram[first, second] = 1.0
        return cls((), gram)


def normalization_constant(packets: PacketSet) -> float:
    """Permutation normalization of the product state, the permanent of the Gram matrix

    Ranges from 1 for mutually orthogonal photons to ``N!`` for identical ones.
    """
    return permanent(packets.gram).real


def frequency_axis(
    center: float,
    bandwidth: float,
    points: int = constants.GRID_POINTS,
    span: float = constants.GRID_SPAN,
) -> numpy.ndarray:
    """Uniform frequency grid covering ``center +/- span * bandwidth``"""
    return numpy.linspace(center - span * bandwidth, center + span * bandwidth, points)


AmplitudeFunction = Callable[[numpy.ndarray, numpy.ndarray], numpy.ndarray]


@dataclasses.dataclass(frozen=True, eq=False)
class JointAmplitude:
    """Two-photon spectral amplitude sampled on a rectangular frequency grid

    :param grid: ``grid[i, j]`` is the amplitude at ``(omega1[i], omega2[j])``
    :param omega1: Uniform frequency axis of the first photon
    :param omega2: Uniform frequency axis of the second photon
    :param source: Function the grid was sampled from, used to refine the grid
    """

    grid: numpy.ndarray
    omega1: numpy.ndarray
    omega2: numpy.ndarray
    source: Optional[AmplitudeFunction] = None

    def __post_init__(self):
        if len(self.omega1) < 2 or len(self.omega2) < 2:
            raise exceptions.ResolutionError("Frequency axes need at least two points")
        if numpy.shape(self.grid) != (len(self.omega1), len(self.omega2)):
            raise exceptions.MatrixShapeError(
                f"Grid of shape {numpy.shape(self.grid)} does not match axes of "
                f"{len(self.omega1)} and {len(self.omega2)} points"
            )

    @property
    def step1(self) -> float:  # pylint: disable=missing-function-docstring
        return float(self.omega1[1] - self.omega1[0])

    @property
    def step2(self) -> float:  # pylint: disable=missing-function-docstring
        return float(self.omega2[1] - self.omega2[0])

    @classmethod
    def from_function(
        cls, source: AmplitudeFunction, omega1: numpy.ndarray, omega2: numpy.ndarray
    ) -> "JointAmplitude":
        """Sample ``source(w1, w2)`` on the outer grid of two axes"""
        first, second = numpy.meshgrid(omega1, omega2, indexing="ij")
        return cls(
            numpy.asarray(source(first, second), dtype=complex),
            numpy.asarray(omega1, dtype=float),
            numpy.asarray(omega2, dtype=float),
            source,
        )

    @classmethod
    def separable(
        cls,
        first: GaussianPacket,
        second: GaussianPacket,
        points: int = constants.GRID_POINTS,
        span: float = constants.GRID_SPAN,
    ) -> "JointAmplitude":
        """Product amplitude of two independent photons on a shared axis covering both"""
        low = min(
            packet.center_frequency - span * packet.bandwidth for packet in (first, second)
        )
        high = max(
            packet.center_frequency + span * packet.bandwidth for packet in (first, second)
        )
        axis = numpy.linspace(low, high, points)
        return cls.from_function(
            lambda omega1, omega2: first.amplitude(omega1) * second.amplitude(omega2), axis, axis
        )

    def refined(self) -> "JointAmplitude":
        """Resample on axes with twice the resolution over the same range

        :raises ResolutionError: when the amplitude has no source function
        """
        if self.source is None:
            raise exceptions.ResolutionError("Sampled amplitude without a source cannot be refined")
        return self.from_function(
            self.source,
            numpy.linspace(self.omega1[0], self.omega1[-1], 2 * len(self.omega1) - 1),
            numpy.linspace(self.omega2[0], self.omega2[-1], 2 * len(self.omega2) - 1),
        )


def _pair_sums(joint: JointAmplitude) -> Tuple[float, float]:
    area = joint.step1 * joint.step2
    norm = float(numpy.sum(numpy.abs(joint.grid) ** 2)) * area
    gram = joint.grid @ joint.grid.conj().T
    exchange = float(numpy.trace(gram @ gram).real) * area ** 2
    return norm ** 2, exchange


def _check_converged(name: str, coarse: Sequence[float], fine: Sequence[float]):
    for coarse_value, fine_value in zip(coarse, fine):
        scale = max(abs(fine_value), abs(coarse_value))
        if scale and abs(fine_value - coarse_value) / scale > constants.GRID_CONVERGENCE:
            raise exceptions.ResolutionError(
                f"{name} changed from {coarse_value!r} to {fine_value!r} when the grid was doubled"
            )


def pair_quantities(joint: JointAmplitude, check_convergence: bool = True) -> Tuple[float, float]:
    """Pair quantities ``(A, E)`` of a two-photon amplitude

    ``A = I^2`` with ``I`` the squared norm of the amplitude and ``E = Tr[(M M^+)^2] dw^4``, the
    integral of the amplitude against itself with the second frequencies exchanged.
    ``0 <= E <= A`` with equality for a separable amplitude.

    :param joint: Sampled two-photon amplitude
    :param check_convergence: Recompute on a doubled grid and require agreement
    :raises ResolutionError: when the doubled grid changes either quantity by more than the
                             convergence tolerance
    """
    result = _pair_sums(joint)
    if check_convergence:
        if joint.source is None:
            logger.warning("Skipping the grid convergence check for an amplitude without a source")
        else:
            refined = _pair_sums(joint.refined())
            logger.debug(f"Pair quantities {result} refine to {refined}")
            _check_converged("Pair quantity", result, refined)
    return result


def four_photon_pair_quantities(
    first: JointAmplitude, second: JointAmplitude
) -> Tuple[float, float]:
    """Pair quantities of two independently emitted pairs

    For a four-photon amplitude factorized into two pair amplitudes the exchange quantity is
    ``E = Tr(M1^+ M1 M2^+ M2) dw^4`` and ``A = I1 I2``. Both grids must share their axes.
    """
    if first.grid.shape != second.grid.shape or not (
        numpy.allclose(first.omega1, second.omega1) and numpy.allclose(first.omega2, second.omega2)
    ):
        raise exceptions.MatrixShapeError("Pair amplitudes must be sampled on the same grid")
    area = first.step1 * first.step2
    norm_first = float(numpy.sum(numpy.abs(first.grid) ** 2)) * area
    norm_second = float(numpy.sum(numpy.abs(second.grid) ** 2)) * area
    exchange = numpy.trace(
        first.grid.conj().T @ first.grid @ second.grid.conj().T @ second.grid
    )
    return norm_first * norm_second, float(exchange.real) * area ** 2


def hom_visibility(joint: JointAmplitude) -> float:
    """Two-photon exchange visibility of a joint amplitude

    Overlap of the amplitude with its frequency-exchanged copy divided by its squared norm;
    1 for an exchange-symmetric amplitude, 0 when the exchange overlap vanishes.

    :raises MatrixShapeError: when the two photons are not sampled on the same axis
    :raises VisibilityPhaseError: when the quotient has a non-negligible imaginary part
    """
    if len(joint.omega1) != len(joint.omega2) or not numpy.allclose(joint.omega1, joint.omega2):
        raise exceptions.MatrixShapeError("Exchange visibility needs a shared frequency axis")
    weight = numpy.sum(numpy.abs(joint.grid) ** 2)
    if weight == 0.0:
        raise exceptions.ResolutionError("Joint amplitude vanishes on its grid")
    quotient = numpy.sum(joint.grid.conj() * joint.grid.T) / weight
    if abs(quotient.imag) > constants.VISIBILITY_IMAGINARY_TOLERANCE:
        raise exceptions.VisibilityPhaseError(
            f"Exchange visibility has imaginary part {quotient.imag!r}"
        )
    return float(quotient.real)


@dataclasses.dataclass(frozen=True, eq=False)
class InternalModeEmbedding:
    """Expansion of each photon over a set of orthonormal internal modes

    :param coefficients: ``coefficients[p, k]`` is the amplitude of photon ``p`` in internal
                         mode ``k``; rows reproduce the Gram matrix as
                         ``gram[p, q] = sum_k conj(c[p, k]) c[q, k]``
    """

    coefficients: numpy.ndarray

    @property
    def internal_modes(self) -> int:  # pylint: disable=missing-function-docstring
        return self.coefficients.shape[1]

    @property
    def photon_count(self) -> int:  # pylint: disable=missing-function-docstring
        return self.coefficients.shape[0]

    def state(self, input_modes: Sequence[int], mode_count: int) -> FockVector:
        """Unnormalized product state of all photons in their spatial input modes

        Modes are laid out as ``spatial * internal_modes + internal``. The squared norm is
        the permanent of the Gram matrix with the overlaps of photons in different spatial
        modes set to zero.
        """
        if len(input_modes) != self.photon_count:
            raise exceptions.ModeCountMismatchError(
                f"Got {len(input_modes)} input modes for {self.photon_count} photons"
            )
        state = fock_core.vacuum(mode_count * self.internal_modes)
        for photon, spatial in enumerate(input_modes):
            created = FockVector({}, state.mode_count)
            for internal, coefficient in enumerate(self.coefficients[photon]):
                if coefficient == 0:
                    continue
                created = fock_core.add(
                    created,
                    fock_core.scale(
                        fock_core.apply_creation(state, spatial * self.internal_modes + internal),
                        coefficient,
                    ),
                )
            state = created
        return state


def embed_internal_modes(packets: PacketSet) -> InternalModeEmbedding:
    """Orthogonalize the photons of a packet set into internal modes

    The Gram matrix is checked for positive semidefiniteness, small negative eigenvalues are
    clipped, and a rank-revealing pivoted Cholesky factorization supplies one internal mode per
    unit of rank.

    :raises IndefiniteGramError: when an eigenvalue lies below the tolerated floor
    """
    gram = numpy.array(packets.gram, dtype=complex)
    eigenvalues, eigenvectors = scipy.linalg.eigh(gram)
    if eigenvalues[0] < constants.GRAM_EIGENVALUE_FLOOR:
        raise exceptions.IndefiniteGramError(
            f"Gram matrix has eigenvalue {eigenvalues[0]!r} below {constants.GRAM_EIGENVALUE_FLOOR}"
        )
    if eigenvalues[0] < 0.0:
        logger.warning(f"Clipping Gram matrix eigenvalue {eigenvalues[0]!r} to zero")
        gram = (eigenvectors * numpy.clip(eigenvalues, 0.0, None)) @ eigenvectors.conj().T

    factor, pivots, rank, info = scipy.linalg.lapack.zpstrf(
        numpy.asfortranarray(gram), tol=constants.GRAM_RANK_TOLERANCE, lower=1
    )
    if info < 0:
        raise exceptions.IndefiniteGramError(f"Pivoted Cholesky failed with status {info}")
    lower = numpy.tril(factor)[:, :rank]
    # Row i of the factor belongs to photon pivots[i] - 1
    rows = numpy.zeros((packets.size, rank), dtype=complex)
    rows[numpy.asarray(pivots) - 1] = lower
    logger.debug(f"Embedded {packets.size} photons into {rank} internal modes")
    return InternalModeEmbedding(rows.conj())


def coincidence_with_distinguishability(
    packets: PacketSet,
    network: linear_optics.Network,
    pattern: Sequence[Optional[int]],
    input_modes: Optional[Sequence[int]] = None,
    mode_count: Optional[int] = None,
) -> float:
    """Exact detection probability of a spatial pattern for partially distinguishable photons

    :param packets: Photons with their overlaps
    :param network: Elements acting on the spatial modes; replicated over internal modes
    :param pattern: Required photon count per spatial output mode, ``None`` for unconstrained
    :param input_modes: Spatial input mode of each photon; defaults to photon ``p`` in mode ``p``
    :param mode_count: Number of spatial input modes; defaults to one past the highest input
    :raises ShellOverflowError: when there are more photons than the engine supports
    """
    if packets.size > constants.DISTINGUISHABILITY_LIMIT:
        raise exceptions.ShellOverflowError(
            f"{packets.size} photons exceed the distinguishability limit of "
            f"{constants.DISTINGUISHABILITY_LIMIT}"
        )
    input_modes = list(range(packets.size)) if input_modes is None else list(input_modes)
    mode_count = max(input_modes) + 1 if mode_count is None else mode_count

    embedding = embed_internal_modes(packets)
    state = fock_core.normalize(embedding.state(input_modes, mode_count))
    evolved = linear_optics.apply_network(state, network, embedding.internal_modes)
    if len(pattern) != evolved.mode_count // embedding.internal_modes:
        raise exceptions.ModeCountMismatchError(
            f"Pattern {tuple(pattern)} does not cover "
            f"{evolved.mode_count // embedding.internal_modes} spatial modes"
        )
    return linear_optics.spatial_pattern_probability(evolved, pattern, embedding.internal_modes)
