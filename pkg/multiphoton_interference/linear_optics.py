"""Evolution of Fock states through lossless couplers, phase shifters and small networks

Evolution is done in the Schrodinger picture by rewriting the creation-operator monomial of
every term with the input-output substitution of the element and re-expanding. For a
two-mode coupler with transmissivity ``T`` and reflectivity ``R = 1 - T`` acting on the mode
pair ``(i, j)`` the substitution is fixed network-wide as::

    a_i^+  ->  sqrt(T) b_i^+ + sqrt(R) b_j^+
    a_j^+  ->  sqrt(T) b_j^+ - sqrt(R) b_i^+

Networks are ordered lists of elements applied one after the other. Every element acts on
spatial modes; when a state also carries internal (temporal) modes, the element is
replicated across them and internal modes are never mixed.
"""
import cmath
import collections
import dataclasses
import math
from typing import DefaultDict
from typing import Dict
from typing import List
from typing import Mapping
from typing import Optional
from typing import Sequence
from typing import Tuple
from typing import Union

import numpy

from multiphoton_interference import constants
from multiphoton_interference import exceptions
from multiphoton_interference import fock_core
from multiphoton_interference import logger
from multiphoton_interference.fock_core import FockVector
from multiphoton_interference.fock_core import Occupation


@dataclasses.dataclass(frozen=True)
class SplitterElement:
    """Lossless two-mode coupler

    :param transmissivity: Intensity transmission ``T`` in ``[0, 1]``
    :param mode_pair: The two (distinct) modes the coupler mixes; the minus sign of the
                      substitution sits on the reflected term of the second mode
    """

    transmissivity: float
    mode_pair: Tuple[int, int] = (0, 1)

    def __post_init__(self):
        if not 0.0 <= self.transmissivity <= 1.0:
            raise exceptions.InvalidTransmissivityError(
                f"Splitter transmissivity {self.transmissivity!r} is outside of [0, 1]"
            )
        if self.mode_pair[0] == self.mode_pair[1]:
            raise exceptions.InvalidModeError(
                f"Splitter needs two distinct modes, got {self.mode_pair}"
            )

    @property
    def reflectivity(self) -> float:  # pylint: disable=missing-function-docstring
        return 1.0 - self.transmissivity

    def inverse(self) -> "SplitterElement":
        """The coupler undoing this one: same transmissivity, mode pair reversed"""
        return SplitterElement(self.transmissivity, (self.mode_pair[1], self.mode_pair[0]))

    def transfer_matrix(self, mode_count: int) -> numpy.ndarray:
        """Single-photon substitution matrix, ``[input mode, output mode]``"""
        first, second = self.mode_pair
        matrix = numpy.eye(mode_count, dtype=complex)
        transmitted = math.sqrt(self.transmissivity)
        reflected = math.sqrt(self.reflectivity)
        matrix[first, first] = transmitted
        matrix[first, second] = reflected
        matrix[second, second] = transmitted
        matrix[second, first] = -reflected
        return matrix


@dataclasses.dataclass(frozen=True)
class PhaseElement:
    """Phase shift ``phase`` (radians) on a single mode"""

    mode: int
    phase: float

    def transfer_matrix(self, mode_count: int) -> numpy.ndarray:
        """Single-photon substitution matrix, ``[input mode, output mode]``"""
        matrix = numpy.eye(mode_count, dtype=complex)
        matrix[self.mode, self.mode] = cmath.exp(1j * self.phase)
        return matrix


@dataclasses.dataclass(frozen=True)
class PolarizationSplitterAngle:
    """Half-wave plate followed by a polarizing splitter, acting as a variable coupler

    The rotation ``theta`` maps onto a coupler with ``R = sin^2(2 theta)``.
    """

    theta: float

    def to_splitter(self, mode_pair: Tuple[int, int] = (0, 1)) -> SplitterElement:
        """Equivalent two-mode coupler"""
        return SplitterElement(math.cos(2.0 * self.theta) ** 2, mode_pair)

    @classmethod
    def null_for(cls, photons: int) -> "PolarizationSplitterAngle":
        """Rotation nulling the ``|N, 1>`` coincidence, ``sin^2(2 theta) = 1 / (N + 1)``"""
        return cls(0.5 * math.asin(math.sqrt(1.0 / (photons + 1))))


@dataclasses.dataclass(frozen=True)
class NoonFanElement:
    """Detector fan of the NOON-state projection measurement

    Maps the two polarization modes onto ``photons`` detector modes; detector ``n`` sees
    ``(a_H - a_V exp(i delta_n)) / (N sqrt 2)`` with ``delta_n = 2 pi (n - 1) / N``. The
    vacuum ports of the fan are left out, so the map is not unitary and states leaving it are
    not normalized.
    """

    photons: int
    mode_pair: Tuple[int, int] = (0, 1)

    def output_mode_count(self, mode_count: int) -> int:
        """Number of detector modes produced from ``mode_count`` input modes"""
        if mode_count != 2:
            raise exceptions.InvalidModeError(
                f"Detector fan expects a two-mode input, got {mode_count} modes"
            )
        return self.photons

    def transfer_matrix(self, mode_count: int) -> numpy.ndarray:
        """Single-photon substitution matrix, ``[input mode, detector]``"""
        matrix = numpy.zeros((mode_count, self.output_mode_count(mode_count)), dtype=complex)
        weight = 1.0 / (self.photons * math.sqrt(2.0))
        for detector in range(self.photons):
            twist = 2.0 * math.pi * detector / self.photons
            matrix[self.mode_pair[0], detector] = weight
            matrix[self.mode_pair[1], detector] = -cmath.exp(1j * twist) * weight
        return matrix


NetworkElement = Union[SplitterElement, PhaseElement, NoonFanElement]

Network = Sequence[NetworkElement]


def _check_pair(state: FockVector, modes: Sequence[int]):
    for mode in modes:
        if not 0 <= mode < state.mode_count:
            raise exceptions.InvalidModeError(
                f"Mode {mode} is out of range for a {state.mode_count}-mode state"
            )


def apply_splitter(state: FockVector, splitter: SplitterElement) -> FockVector:
    """Evolve a state through a two-mode coupler

    Each term ``|.., n1, .., n2, ..>`` is rewritten as the monomial
    ``a_i^+^n1 a_j^+^n2 / sqrt(n1! n2!)`` under the coupler substitution and re-expanded with
    binomial coefficients. Photon number and norm are preserved.
    """
    first, second = splitter.mode_pair
    _check_pair(state, splitter.mode_pair)
    transmitted = math.sqrt(splitter.transmissivity)
    reflected = math.sqrt(splitter.reflectivity)

    terms: DefaultDict[Occupation, complex] = collections.defaultdict(complex)
    for occupation, amplitude in state:
        count_first, count_second = occupation[first], occupation[second]
        base = amplitude / math.sqrt(
            math.factorial(count_first) * math.factorial(count_second)
        )
        output = list(occupation)
        # ``kept_first`` photons of the first mode transmit, the rest reflect into the second;
        # ``kept_second`` photons of the second mode transmit, the rest reflect into the first
        for kept_first in range(count_first + 1):
            weight_first = (
                math.comb(count_first, kept_first)
                * transmitted ** kept_first
                * reflected ** (count_first - kept_first)
            )
            for kept_second in range(count_second + 1):
                weight_second = (
                    math.comb(count_second, kept_second)
                    * transmitted ** kept_second
                    * (-reflected) ** (count_second - kept_second)
                )
                output[first] = kept_first + count_second - kept_second
                output[second] = count_first - kept_first + kept_second
                terms[tuple(output)] += (
                    base
                    * weight_first
                    * weight_second
                    * math.sqrt(
                        math.factorial(output[first]) * math.factorial(output[second])
                    )
                )
    return FockVector(terms, state.mode_count, normalized=state.normalized)


def apply_phase(state: FockVector, element: PhaseElement) -> FockVector:
    """Multiply each term by ``exp(i n phase)`` for its ``n`` photons in the element's mode"""
    _check_pair(state, (element.mode,))
    return FockVector(
        {
            occupation: amplitude * fock_core.phase_factor(occupation[element.mode], element.phase)
            for occupation, amplitude in state
        },
        state.mode_count,
        normalized=state.normalized,
    )


def _multiply_linear(
    polynomial: Mapping[Occupation, complex], row: numpy.ndarray
) -> Dict[Occupation, complex]:
    product: DefaultDict[Occupation, complex] = collections.defaultdict(complex)
    targets = [(index, complex(value)) for index, value in enumerate(row) if value != 0]
    for monomial, coefficient in polynomial.items():
        for index, value in targets:
            raised = list(monomial)
            raised[index] += 1
            product[tuple(raised)] += coefficient * value
    return product


def apply_substitution(state: FockVector, matrix: numpy.ndarray) -> FockVector:
    """Evolve a state under a general linear creation-operator substitution

    ``a_in^+ -> sum_out matrix[in, out] b_out^+``. The matrix may be rectangular and need not be
    unitary; the result keeps the normalized flag only when the matrix is unitary.
    """
    matrix = numpy.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != state.mode_count:
        raise exceptions.ModeCountMismatchError(
            f"Substitution matrix of shape {matrix.shape} does not act on {state.mode_count} modes"
        )
    out_count = matrix.shape[1]
    unitary = out_count == state.mode_count and numpy.allclose(
        matrix @ matrix.conj().T, numpy.eye(out_count), atol=constants.NORM_TOLERANCE
    )

    terms: DefaultDict[Occupation, complex] = collections.defaultdict(complex)
    for occupation, amplitude in state:
        polynomial: Dict[Occupation, complex] = {(0,) * out_count: 1.0 + 0j}
        for mode, count in enumerate(occupation):
            for _ in range(count):
                polynomial = _multiply_linear(polynomial, matrix[mode])
        base = amplitude / math.sqrt(math.prod(math.factorial(item) for item in occupation))
        for monomial, coefficient in polynomial.items():
            terms[monomial] += (
                base
                * coefficient
                * math.sqrt(math.prod(math.factorial(item) for item in monomial))
            )
    return FockVector(terms, out_count, normalized=state.normalized and unitary)


def apply_element(
    state: FockVector, element: NetworkElement, internal_modes: int = 1
) -> FockVector:
    """Apply one network element, replicated across ``internal_modes`` internal modes

    Modes are laid out as ``spatial * internal_modes + internal``.
    """
    if state.mode_count % internal_modes:
        raise exceptions.ModeCountMismatchError(
            f"{state.mode_count} modes cannot hold {internal_modes} internal modes per spatial mode"
        )
    spatial_count = state.mode_count // internal_modes
    if isinstance(element, SplitterElement):
        first, second = element.mode_pair
        for internal in range(internal_modes):
            state = apply_splitter(
                state,
                SplitterElement(
                    element.transmissivity,
                    (
                        first * internal_modes + internal,
                        second * internal_modes + internal,
                    ),
                ),
            )
        return state
    if isinstance(element, PhaseElement):
        for internal in range(internal_modes):
            state = apply_phase(
                state, PhaseElement(element.mode * internal_modes + internal, element.phase)
            )
        return state
    return apply_substitution(
        state,
        numpy.kron(
            element.transfer_matrix(spatial_count), numpy.eye(internal_modes, dtype=complex)
        ),
    )


def apply_network(state: FockVector, network: Network, internal_modes: int = 1) -> FockVector:
    """Apply an ordered list of elements"""
    for element in network:
        logger.debug(f"Applying {element} to a state of {len(state)} terms")
        state = apply_element(state, element, internal_modes)
    return state


def postselect(
    state: FockVector, pattern: Mapping[int, int], renormalize: bool = False
) -> Tuple[FockVector, float]:
    """Project onto the subspace matching a partial occupation constraint

    :param state: State to project
    :param pattern: Mapping of mode index to the required photon count; unlisted modes are
                    unconstrained
    :param renormalize: Return the renormalized conditional state instead of the projection
    :returns: Tuple of the projected state and the post-selection probability (its squared
              norm). An empty projection yields a zero state and probability zero.
    """
    _check_pair(state, list(pattern))
    projected = FockVector(
        {
            occupation: amplitude
            for occupation, amplitude in state
            if all(occupation[mode] == count for mode, count in pattern.items())
        },
        state.mode_count,
    )
    probability = fock_core.squared_norm(projected)
    if renormalize and probability > 0.0:
        return fock_core.normalize(projected), probability
    return projected, probability


def classical_distribution(
    inputs: Sequence[int], network: Network
) -> Dict[Occupation, float]:
    """Outcome distribution of independent classical particles routed through a network

    Each particle leaves through mode ``out`` with probability ``|U[in, out]|^2``, where ``U`` is
    the product of the element substitution matrices, independently of every other particle.
    Single-particle interference along a path through several elements is kept.
    """
    inputs = fock_core.as_occupation(inputs)
    transfer = numpy.eye(len(inputs), dtype=complex)
    for element in network:
        transfer = transfer @ element.transfer_matrix(transfer.shape[1])
    routing = numpy.abs(transfer) ** 2

    distribution: Dict[Occupation, float] = {(0,) * routing.shape[1]: 1.0}
    for mode, count in enumerate(inputs):
        for _ in range(count):
            spread: DefaultDict[Occupation, float] = collections.defaultdict(float)
            for occupation, probability in distribution.items():
                for target, hop in enumerate(routing[mode]):
                    if hop <= constants.PRUNE_THRESHOLD:
                        continue
                    moved = list(occupation)
                    moved[target] += 1
                    spread[tuple(moved)] += probability * hop
            distribution = spread
    return dict(distribution)


def classical_outcome_probability(
    inputs: Sequence[int], splitter: SplitterElement, outcome: Sequence[int]
) -> float:
    """Probability that independent particles entering as ``inputs`` leave as ``outcome``

    A photon-number mismatch between ``inputs`` and ``outcome`` gives zero.
    """
    inputs = fock_core.as_occupation(inputs)
    outcome = fock_core.as_occupation(outcome)
    if len(inputs) != len(outcome):
        raise exceptions.ModeCountMismatchError(
            f"Inputs {inputs} and outcome {outcome} disagree on the number of modes"
        )
    if sum(inputs) != sum(outcome):
        return 0.0
    return classical_distribution(inputs, [splitter]).get(outcome, 0.0)


def make_noon(photons: int, relative_phase: float = 0.0) -> FockVector:
    """``(|N, 0> + exp(i relative_phase) |0, N>) / sqrt 2``"""
    if photons < 1:
        raise exceptions.InvalidOccupationError(
            f"NOON state needs at least one photon, got {photons}"
        )
    return FockVector(
        {
            (photons, 0): 1.0 / math.sqrt(2.0),
            (0, photons): cmath.exp(1j * relative_phase) / math.sqrt(2.0),
        },
        2,
        normalized=True,
    )


def _twisted_photon(state: FockVector, horizontal: int, vertical: int, twist: float):
    return fock_core.scale(
        fock_core.add(
            fock_core.apply_creation(state, horizontal),
            fock_core.scale(fock_core.apply_creation(state, vertical), -cmath.exp(1j * twist)),
        ),
        1.0 / math.sqrt(2.0),
    )


def hofmann_merge(photons: int) -> Tuple[FockVector, float]:
    """Merge ``N`` polarization-twisted single photons into one spatial mode

    Photon ``n`` starts in its own spatial mode as ``(|H> - exp(i delta_n) |V>) / sqrt 2`` with
    ``delta_n = 2 pi (n - 1) / N``. A cascade of ``N - 1`` couplers with transmissivities
    ``k / (k + 1)`` feeds every photon into spatial mode 0 with amplitude ``1 / sqrt N``;
    projecting all photons into that mode leaves a state proportional to
    ``|N_H, 0_V> - |0_H, N_V>``.

    :returns: Tuple of the (unnormalized) projected two-mode polarization state and its
              squared norm, the projection probability ``2 N! / (2N)^N``
    """
    if photons < 1:
        raise exceptions.InvalidOccupationError(
            f"Merge needs at least one photon, got {photons}"
        )
    if photons > constants.MERGE_LIMIT:
        raise exceptions.ShellOverflowError(
            f"Merge of {photons} photons exceeds the supported limit of {constants.MERGE_LIMIT}"
        )

    # Mode layout: 2 * spatial + polarization, polarization 0 = H, 1 = V
    state = fock_core.vacuum(2 * photons)
    for index in range(photons):
        state = _twisted_photon(
            state, 2 * index, 2 * index + 1, 2.0 * math.pi * index / photons
        )

    network: List[NetworkElement] = [
        SplitterElement(index / (index + 1.0), (2 * index + polarization, polarization))
        for index in range(1, photons)
        for polarization in (0, 1)
    ]
    merged = apply_network(state, network)
    projected, probability = postselect(
        merged, {mode: 0 for mode in range(2, 2 * photons)}
    )
    logger.debug(f"Merged {photons} photons with projection probability {probability!r}")
    return fock_core.reduce_modes(projected, (0, 1)), probability


def noon_projection_rate(coefficients: Sequence[complex], photons: int) -> float:
    """Coincidence rate of the NOON projection measurement for ``sum_n c_n |N-n>_H |n>_V``

    The exact fan probability from :func:`noon_projection_coincidence` is this rate times
    ``N! / 2``.

    :returns: ``|c_0 - c_N|^2 / (2^(N-1) N^(2N))``
    """
    if len(coefficients) != photons + 1:
        raise exceptions.InvalidOccupationError(
            f"Expected {photons + 1} coefficients for {photons} photons, got {len(coefficients)}"
        )
    difference = complex(coefficients[0]) - complex(coefficients[photons])
    return abs(difference) ** 2 / (2 ** (photons - 1) * photons ** (2 * photons))


def noon_projection_coincidence(state: FockVector, internal_modes: int = 1) -> float:
    """Probability that every detector of the NOON projection fan fires exactly once

    Evaluated by pushing the state through :class:`NoonFanElement` with the substitution
    engine. Detectors do not resolve internal modes, so all internal assignments are summed.
    """
    photons = state.photon_numbers()
    if len(photons) != 1:
        raise exceptions.StateError(
            f"Projection measurement needs a definite photon number, got {photons}"
        )
    fanned = apply_element(state, NoonFanElement(photons[0]), internal_modes)
    return spatial_pattern_probability(fanned, (1,) * photons[0], internal_modes)


def spatial_pattern_probability(
    state: FockVector, pattern: Sequence[Optional[int]], internal_modes: int = 1
) -> float:
    """Summed weight of every term whose spatial photon counts match ``pattern``

    Photon counts are summed over the internal modes of each spatial mode; a ``None`` entry in
    ``pattern`` leaves that spatial mode unconstrained.
    """
    weight = 0.0
    for occupation, amplitude in state:
        spatial = [
            sum(occupation[mode * internal_modes : (mode + 1) * internal_modes])
            for mode in range(len(pattern))
        ]
        if all(want is None or want == have for want, have in zip(pattern, spatial)):
            weight += abs(amplitude) ** 2
    return weight


def coherent_state_shell(alpha: complex, photons: int) -> List[complex]:
    """Taylor-truncated weak coherent state, ``alpha^n / sqrt(n!)`` for ``n <= photons``"""
    return [
        complex(alpha) ** count / math.sqrt(math.factorial(count)) for count in range(photons + 1)
    ]


def pdc_state_shell(eta: complex, photons: int) -> List[complex]:
    """Taylor-truncated single-mode down-conversion state, ``eta^(n/2)`` for even ``n``"""
    return [
        complex(eta) ** (count // 2) if count % 2 == 0 else 0j for count in range(photons + 1)
    ]


def product_shell(
    first: Sequence[complex], second: Sequence[complex], photons: int
) -> FockVector:
    """Project the product of two single-mode superpositions onto a fixed photon shell"""
    return FockVector(
        {
            (count, photons - count): complex(first[count]) * complex(second[photons - count])
            for count in range(photons + 1)
        },
        2,
    )
