"""Exact algebra of multimode bosonic Fock states

States are sparse maps from occupation vectors (photons per mode) to complex amplitudes.
Every function here returns a new :class:`FockVector`; nothing is mutated in place.

Normalization is never implicit. The ``normalized`` flag is only set where unit norm is
guaranteed, for example on basis kets or after :func:`normalize`. Projected and
operator-multiplied states stay unnormalized and their squared norm is the probability.
"""
import cmath
import itertools
import math
import types
from typing import Dict
from typing import Iterator
from typing import Mapping
from typing import Optional
from typing import Sequence
from typing import Tuple

from multiphoton_interference import constants
from multiphoton_interference import exceptions


Occupation = Tuple[int, ...]


def as_occupation(counts: Sequence[int]) -> Occupation:
    """Validate a sequence of photon counts and convert it to a hashable occupation vector

    :param counts: Photons per mode
    :raises InvalidOccupationError: if there are no modes or any count is negative
    """
    occupation = tuple(int(item) for item in counts)
    if not occupation:
        raise exceptions.InvalidOccupationError("Occupation vector needs at least one mode")
    if any(item < 0 for item in occupation):
        raise exceptions.InvalidOccupationError(
            f"Occupation vector {occupation} holds a negative photon count"
        )
    return occupation


class FockVector:
    """Sparse superposition over occupation-number basis states

    :param terms: Mapping of occupation vectors to complex amplitudes
    :param mode_count: Number of modes every occupation vector must have
    :param normalized: Whether the state is known to have unit norm; checked on construction
    :param prune: Amplitudes with magnitude at or below this value are dropped
    """

    __slots__ = ("_terms", "mode_count", "normalized")

    def __init__(
        self,
        terms: Mapping[Occupation, complex],
        mode_count: int,
        normalized: bool = False,
        prune: float = constants.PRUNE_THRESHOLD,
    ):
        if mode_count < 1:
            raise exceptions.InvalidOccupationError(
                f"Fock vector needs at least one mode, got {mode_count}"
            )
        kept: Dict[Occupation, complex] = {}
        for occupation, amplitude in terms.items():
            if len(occupation) != mode_count:
                raise exceptions.ModeCountMismatchError(
                    f"Occupation vector {occupation} does not have {mode_count} modes"
                )
            if abs(amplitude) > prune:
                kept[as_occupation(occupation)] = complex(amplitude)
        self._terms = types.MappingProxyType(kept)
        self.mode_count = mode_count
        self.normalized = normalized
        if normalized:
            weight = sum(abs(item) ** 2 for item in kept.values())
            if abs(weight - 1.0) > constants.NORM_TOLERANCE:
                raise exceptions.UnnormalizedStateError(
                    f"State flagged as normalized has squared norm {weight!r}"
                )

    @property
    def terms(self) -> Mapping[Occupation, complex]:
        """Read-only view of the non-zero amplitudes"""
        return self._terms

    def amplitude(self, occupation: Sequence[int]) -> complex:
        """Amplitude of a single basis ket, zero when absent"""
        return self._terms.get(tuple(occupation), 0j)

    def photon_numbers(self) -> Tuple[int, ...]:
        """Sorted total photon numbers present in the superposition"""
        return tuple(sorted({sum(item) for item in self._terms}))

    def __iter__(self) -> Iterator[Tuple[Occupation, complex]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        shown = " + ".join(
            f"({amplitude:.6g})|{','.join(str(item) for item in occupation)}>"
            for occupation, amplitude in sorted(self._terms.items())
        )
        return f"FockVector({shown or '0'}, modes={self.mode_count}, normalized={self.normalized})"


def _check_shell(total: int):
    if total > constants.SHELL_LIMIT:
        raise exceptions.ShellOverflowError(
            f"Total photon number {total} exceeds the supported shell of {constants.SHELL_LIMIT}"
        )


def _check_mode(state: FockVector, mode: int):
    if not 0 <= mode < state.mode_count:
        raise exceptions.InvalidModeError(
            f"Mode {mode} is out of range for a {state.mode_count}-mode state"
        )


def _check_same_modes(first: FockVector, second: FockVector):
    if first.mode_count != second.mode_count:
        raise exceptions.ModeCountMismatchError(
            f"States have {first.mode_count} and {second.mode_count} modes"
        )


def make_basis_state(occupation: Sequence[int]) -> FockVector:
    """Build the normalized basis ket for an occupation vector

    :param occupation: Photons per mode
    :returns: Single-term state with unit amplitude
    """
    occupation = as_occupation(occupation)
    _check_shell(sum(occupation))
    return FockVector({occupation: 1.0}, len(occupation), normalized=True)


def vacuum(mode_count: int) -> FockVector:
    """Normalized vacuum over ``mode_count`` modes"""
    return make_basis_state((0,) * mode_count)


def apply_creation(state: FockVector, mode: int) -> FockVector:
    """Apply the creation operator of ``mode``; the result is generally unnormalized"""
    _check_mode(state, mode)
    terms: Dict[Occupation, complex] = {}
    for occupation, amplitude in state:
        raised = list(occupation)
        raised[mode] += 1
        _check_shell(sum(raised))
        terms[tuple(raised)] = amplitude * math.sqrt(occupation[mode] + 1)
    return FockVector(terms, state.mode_count)


def apply_annihilation(state: FockVector, mode: int) -> FockVector:
    """Apply the annihilation operator of ``mode``; terms with no photon there vanish"""
    _check_mode(state, mode)
    terms: Dict[Occupation, complex] = {}
    for occupation, amplitude in state:
        if occupation[mode] == 0:
            continue
        lowered = list(occupation)
        lowered[mode] -= 1
        terms[tuple(lowered)] = amplitude * math.sqrt(occupation[mode])
    return FockVector(terms, state.mode_count)


def add(first: FockVector, second: FockVector) -> FockVector:
    """Sum of two states over the same modes (unnormalized)"""
    _check_same_modes(first, second)
    terms = dict(first.terms)
    for occupation, amplitude in second:
        terms[occupation] = terms.get(occupation, 0j) + amplitude
    return FockVector(terms, first.mode_count)


def scale(state: FockVector, factor: complex) -> FockVector:
    """Multiply every amplitude by ``factor``

    The normalized flag survives multiplication by a pure phase.
    """
    unit = abs(abs(factor) - 1.0) <= constants.NORM_TOLERANCE
    return FockVector(
        {occupation: amplitude * factor for occupation, amplitude in state},
        state.mode_count,
        normalized=state.normalized and unit,
    )


def inner_product(first: FockVector, second: FockVector) -> complex:
    """Inner product, conjugate-linear in the first argument"""
    _check_same_modes(first, second)
    # Walk the sparser of the two states
    if len(first) > len(second):
        pairs = ((first.amplitude(occupation), amplitude) for occupation, amplitude in second)
    else:
        pairs = ((amplitude, second.amplitude(occupation)) for occupation, amplitude in first)
    return complex(sum(left.conjugate() * right for left, right in pairs))


def squared_norm(state: FockVector) -> float:
    """Squared norm; for projected states this is the projection probability"""
    return float(sum(abs(amplitude) ** 2 for _, amplitude in state))


def norm(state: FockVector) -> float:
    """Euclidean norm of the amplitude vector"""
    return math.sqrt(squared_norm(state))


def normalize(state: FockVector) -> FockVector:
    """Rescale to unit norm and set the normalized flag

    :raises StateError: for the zero vector
    """
    size = norm(state)
    if size == 0.0:
        raise exceptions.StateError("Cannot normalize the zero vector")
    return FockVector(
        {occupation: amplitude / size for occupation, amplitude in state},
        state.mode_count,
        normalized=True,
    )


def outcome_probability(state: FockVector, occupation: Sequence[int]) -> float:
    """Probability of detecting the occupation pattern ``occupation``

    :raises UnnormalizedStateError: if the state is not flagged as normalized
    """
    if not state.normalized:
        raise exceptions.UnnormalizedStateError(
            "Outcome probabilities are only defined for normalized states"
        )
    occupation = as_occupation(occupation)
    if len(occupation) != state.mode_count:
        raise exceptions.ModeCountMismatchError(
            f"Occupation {occupation} does not match a {state.mode_count}-mode state"
        )
    return abs(state.amplitude(occupation)) ** 2


def tensor(first: FockVector, second: FockVector) -> FockVector:
    """Tensor product; mode counts add and amplitudes multiply"""
    terms = {
        left + right: left_amplitude * right_amplitude
        for left, left_amplitude in first
        for right, right_amplitude in second
    }
    return FockVector(
        terms,
        first.mode_count + second.mode_count,
        normalized=first.normalized and second.normalized,
    )


def mean_photon_number(state: FockVector, mode: int) -> float:
    """Expectation of the number operator of ``mode`` divided by the squared norm"""
    _check_mode(state, mode)
    weight = squared_norm(state)
    if weight == 0.0:
        return 0.0
    return sum(abs(amplitude) ** 2 * occupation[mode] for occupation, amplitude in state) / weight


def photon_shell(mode_count: int, total: int) -> Iterator[Occupation]:
    """Enumerate every occupation vector of ``mode_count`` modes holding ``total`` photons"""
    _check_shell(total)
    for placement in itertools.combinations_with_replacement(range(mode_count), total):
        occupation = [0] * mode_count
        for mode in placement:
            occupation[mode] += 1
        yield tuple(occupation)


def reduce_modes(state: FockVector, keep: Sequence[int]) -> FockVector:
    """Restrict a state to the modes in ``keep``

    Only valid when every term agrees on the occupation of the dropped modes, as it does
    after post-selecting those modes. The normalized flag is carried over.

    :raises StateError: if the dropped modes are not in a definite occupation
    """
    keep = tuple(keep)
    for mode in keep:
        _check_mode(state, mode)
    dropped = [mode for mode in range(state.mode_count) if mode not in keep]
    reference: Optional[Occupation] = None
    terms: Dict[Occupation, complex] = {}
    for occupation, amplitude in state:
        rest = tuple(occupation[mode] for mode in dropped)
        if reference is None:
            reference = rest
        elif rest != reference:
            raise exceptions.StateError(
                f"Dropped modes {dropped} are not in a definite occupation"
            )
        terms[tuple(occupation[mode] for mode in keep)] = amplitude
    return FockVector(terms, len(keep), normalized=state.normalized)


def phase_factor(photons: int, phase: float) -> complex:
    """Phase acquired by ``photons`` photons passing a phase shift ``phase``"""
    return cmath.exp(1j * photons * phase)
