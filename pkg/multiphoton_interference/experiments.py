"""Named, parameterized interference experiments

Every runner sweeps one parameter, evaluates the observables with the exact Fock and
distinguishability engines and compares them against closed-form oracle functions defined
in this module. The comparisons are attached to the returned :class:`ScanResult` as
:class:`Check` records.
"""
import cmath
import dataclasses
import math
from typing import Any
from typing import Callable
from typing import Dict
from typing import List
from typing import Mapping
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy
import scipy.optimize

from multiphoton_interference import constants
from multiphoton_interference import exceptions
from multiphoton_interference import fitting
from multiphoton_interference import fock_core
from multiphoton_interference import linear_optics
from multiphoton_interference import logger
from multiphoton_interference import temporal_modes
from multiphoton_interference import utilities
from multiphoton_interference.fitting import FitSummary
from multiphoton_interference.fock_core import FockVector
from multiphoton_interference.linear_optics import NoonFanElement
from multiphoton_interference.linear_optics import PhaseElement
from multiphoton_interference.linear_optics import SplitterElement
from multiphoton_interference.results import Check
from multiphoton_interference.results import ScanResult
from multiphoton_interference.results import max_deviation
from multiphoton_interference.temporal_modes import GaussianPacket
from multiphoton_interference.temporal_modes import PacketSet


Scan = Tuple[float, float, int]

FULL_PHASE_SCAN: Scan = (0.0, 2.0 * math.pi, 97)

TRANSMISSIVITY_SCAN: Scan = (0.0, 1.0, 101)

WANG_KOBAYASHI_NULL: float = 2.0 / 3.0

TWO_PAIR_NULLS: Tuple[float, float] = ((3.0 - math.sqrt(3.0)) / 6.0, (3.0 + math.sqrt(3.0)) / 6.0)

DE_BROGLIE_SCHEMES: Tuple[str, ...] = (
    "four_photon_asym",
    "four_photon_symmetric",
    "noon_projection",
    "three_photon_WK",
)

VISIBILITY_SCHEMES: Tuple[str, ...] = ("asymmetric_bs", "noon_projection")

# Bisection steps of the Monte Carlo inverse-CDF sampler
_SAMPLER_STEPS: int = 52


# Closed-form oracles


def two_laser_correlation(separation: float, spacing: float) -> float:
    """Normalized intensity correlation of two independent lasers, ``0.5 cos(2 pi dx / L)``"""
    return 0.5 * math.cos(2.0 * math.pi * separation / spacing)


def hom_coincidence(transmissivity: float, overlap_squared: float) -> float:
    """``T^2 + R^2 - 2 T R |s|^2`` for two photons with overlap ``s``"""
    reflectivity = 1.0 - transmissivity
    return (
        transmissivity ** 2
        + reflectivity ** 2
        - 2.0 * transmissivity * reflectivity * overlap_squared
    )


def two_photon_bunching_ratio(overlap_squared: float) -> float:
    """Same-port two-photon rate over its classical value, ``1 + |s|^2``"""
    return 1.0 + overlap_squared


def pair_bunching_ratio(overlap_squared: float) -> float:
    """Four-photon same-port rate of two pairs over its classical value of 1/16

    Interpolates between 6 for overlapping pairs and 4 for distinguishable pairs.
    """
    return 16.0 * (1.0 + 4.0 * overlap_squared + overlap_squared ** 2) / (
        4.0 * (1.0 + overlap_squared) ** 2
    )


def stimulated_emission_probability(photons: int) -> float:
    """All ``N + 1`` photons of ``|N, 1>`` leaving one port of a 50:50 coupler"""
    return (photons + 1) / 2.0 ** (photons + 1)


def wang_kobayashi_probability(transmissivity: float) -> float:
    """``P(2, 1) = T (T - 2R)^2`` for ``|2, 1>`` on a coupler"""
    return transmissivity * (transmissivity - 2.0 * (1.0 - transmissivity)) ** 2


def fock_filter_gain(transmissivity: float, photons: int) -> float:
    """Conditioned amplitude of ``|n>`` given one ancilla photon, ``sqrt(T^(n-1)) (T - nR)``"""
    if photons == 0:
        return math.sqrt(transmissivity)
    reflectivity = 1.0 - transmissivity
    return math.sqrt(transmissivity) ** (photons - 1) * (transmissivity - photons * reflectivity)


def two_pair_probability(transmissivity: float) -> float:
    """``P(2, 2) = ((T - R)^2 - 2TR)^2`` for ``|2, 2>`` on a coupler"""
    reflectivity = 1.0 - transmissivity
    return (
        (transmissivity - reflectivity) ** 2 - 2.0 * transmissivity * reflectivity
    ) ** 2


def noon_fringe(photons: int, phase: float) -> float:
    """``(1 + cos N phi) / 2``"""
    return 0.5 * (1.0 + math.cos(photons * phase))


def three_photon_coefficients(alpha: complex, eta: complex) -> Tuple[complex, ...]:
    """Three-photon output of a weak coherent state and a down-converted pair on a 50:50 coupler

    :returns: Amplitudes of ``|3,0>``, ``|2,1>``, ``|1,2>`` and ``|0,3>``
    """
    extreme = alpha / 4.0 * (alpha ** 2 / math.sqrt(3.0) + eta * math.sqrt(6.0))
    middle = alpha / 4.0 * (alpha ** 2 - math.sqrt(2.0) * eta)
    return extreme, middle, middle, extreme


def truncation_error(alpha: complex, eta: complex, photons: int = 3) -> float:
    """Weight of the coherent and down-converted inputs above the post-selected shell"""
    coherent = abs(alpha) ** 2
    pairs = abs(eta) ** 2
    kept = sum(
        math.exp(-coherent) * coherent ** count / math.factorial(count)
        * (1.0 - pairs) * pairs ** pair_count
        for count in range(photons + 1)
        for pair_count in range((photons - count) // 2 + 1)
    )
    return max(0.0, 1.0 - kept)


def de_broglie_fringe(scheme: str, phase: float, photons: int = 4) -> float:
    """Closed-form coincidence fringe of a projection scheme"""
    if scheme == "three_photon_WK":
        return 16.0 / 81.0 * (1.0 + math.cos(3.0 * phase))
    if scheme == "four_photon_asym":
        return (1.0 + math.cos(4.0 * phase)) / 8.0
    if scheme == "four_photon_symmetric":
        return 3.0 / 16.0 * (1.0 - math.cos(4.0 * phase))
    if scheme == "noon_projection":
        return (
            math.factorial(photons)
            * (1.0 - math.cos(photons * phase))
            / (2.0 ** (2 * photons - 1) * photons ** (2 * photons))
        )
    raise exceptions.UnknownSchemeError(f"Unknown projection scheme '{scheme}'")


def hofmann_probability(photons: int) -> float:
    """Projection probability of the merge, ``2 N! / (2N)^N``"""
    return 2.0 * math.factorial(photons) / (2.0 * photons) ** photons


def coherence_degree(photons: int, others: int, indistinguishable: int, partners: int) -> float:
    """Degree of coherence as the indistinguishable fraction ``sqrt(n m / (N M))``"""
    return math.sqrt(indistinguishable * partners / (photons * others))


# Helpers


def _require(condition: bool, message: str):
    if not condition:
        raise exceptions.InvalidParameterError(message)


def _require_bandwidth(bandwidth: float):
    _require(bandwidth > 0.0, f"Packet bandwidth must be positive, got {bandwidth!r}")


def _delayed_packets(bandwidth: float, delays: Sequence[float]) -> PacketSet:
    """Identical Gaussians delayed by dimensionless ``sigma * tau`` values"""
    return PacketSet.from_packets(
        [GaussianPacket(0.0, bandwidth, delay / bandwidth) for delay in delays]
    )


def _monotone(parameters: Sequence[float], values: Sequence[float], increasing: bool) -> bool:
    """Whether ``values`` move monotonically with ``|parameter|``"""
    ordered = [value for _, value in sorted(zip((abs(item) for item in parameters), values))]
    steps = numpy.diff(ordered)
    tolerance = 1e-12
    return bool(numpy.all(steps >= -tolerance) if increasing else numpy.all(steps <= tolerance))


def _flag(name: str, passed: bool) -> Check:
    return Check(name, 1.0, 1.0 if passed else 0.0, 0.0)


def _splitter_amplitude(inputs: Sequence[int], outcome: Sequence[int]) -> Callable[[float], float]:
    state = fock_core.make_basis_state(inputs)

    def _amplitude(transmissivity: float) -> float:
        return linear_optics.apply_splitter(state, SplitterElement(transmissivity)).amplitude(
            outcome
        ).real

    return _amplitude


def _splitter_probability(
    inputs: Sequence[int], outcome: Sequence[int], transmissivity: float
) -> float:
    evolved = linear_optics.apply_splitter(
        fock_core.make_basis_state(inputs), SplitterElement(transmissivity)
    )
    return fock_core.outcome_probability(evolved, outcome)


# Runners


def run_pfleegor_mandel(
    separation_scan: Scan = (0.0, 2.0, 41), fringe_spacing: float = 1.0, threads: int = 0
) -> ScanResult:
    """Two-laser intensity correlation from the four photon-path cases

    Two photons reach detectors at ``x1 = dx`` and ``x2 = 0``. The cross cases (one photon
    from each laser) interfere; the same-laser cases add incoherently. The normalized
    correlation is compared against the closed form and against the classical wave picture
    averaged over the random phase difference of the lasers.
    """
    _require(fringe_spacing > 0.0, f"Fringe spacing must be positive, got {fringe_spacing}")

    def _path_sum(separation: float) -> float:
        def _leg(source_sign: int, position: float) -> complex:
            return cmath.exp(1j * source_sign * math.pi * position / fringe_spacing)

        crossed = abs(_leg(1, separation) * _leg(-1, 0.0) + _leg(1, 0.0) * _leg(-1, separation))
        same = abs(_leg(1, separation) * _leg(1, 0.0)) ** 2 + abs(
            _leg(-1, separation) * _leg(-1, 0.0)
        ) ** 2
        return (crossed ** 2 + same) / 4.0 - 1.0

    laser_phases = utilities.periodic_points(2.0 * math.pi, 64)

    def _wave_average(separation: float) -> float:
        def _intensity(position: float) -> numpy.ndarray:
            return numpy.abs(
                numpy.exp(1j * math.pi * position / fringe_spacing)
                + numpy.exp(1j * laser_phases - 1j * math.pi * position / fringe_spacing)
            ) ** 2

        first, second = _intensity(separation), _intensity(0.0)
        return float(numpy.mean(first * second) / (numpy.mean(first) * numpy.mean(second)) - 1.0)

    def _row(separation: float):
        return (
            separation,
            {
                "path_sum": _path_sum(separation),
                "wave_average": _wave_average(separation),
                "closed_form": two_laser_correlation(separation, fringe_spacing),
            },
        )

    rows = utilities.parallel_map(_row, list(utilities.scan_points(separation_scan)), threads)
    result = ScanResult("pfleegor_mandel", "separation", rows, {"fringe_spacing": fringe_spacing})
    result.checks = [
        Check("correlation_at_spacing", 0.5, _path_sum(fringe_spacing), 1e-12),
        Check("correlation_at_half_spacing", -0.5, _path_sum(fringe_spacing / 2.0), 1e-12),
        Check("correlation_at_quarter_spacing", 0.0, _path_sum(fringe_spacing / 4.0), 1e-12),
        Check(
            "path_sum_closed_form",
            0.0,
            max_deviation(result.column("path_sum"), result.column("closed_form")),
            1e-12,
        ),
        Check(
            "wave_average_closed_form",
            0.0,
            max_deviation(result.column("wave_average"), result.column("closed_form")),
            1e-12,
        ),
    ]
    return result


def run_hom_dip(
    transmissivity: float = 0.5,
    delay_scan: Scan = constants.DELAY_SCAN,
    bandwidth: float = 1.0,
    threads: int = 0,
) -> ScanResult:
    """Two-photon coincidence behind a coupler as one photon is delayed

    The scanned delay is the dimensionless product ``sigma * tau``.
    """
    _require_bandwidth(bandwidth)
    network = [SplitterElement(transmissivity)]
    reflectivity = 1.0 - transmissivity

    def _coincidence(delay: float) -> float:
        return temporal_modes.coincidence_with_distinguishability(
            _delayed_packets(bandwidth, (0.0, delay)), network, (1, 1)
        )

    def _row(delay: float):
        return (
            delay,
            {
                "coincidence": _coincidence(delay),
                "closed_form": hom_coincidence(transmissivity, math.exp(-(delay ** 2))),
            },
        )

    rows = utilities.parallel_map(_row, list(utilities.scan_points(delay_scan)), threads)
    result = ScanResult(
        "hom_dip",
        "delay",
        rows,
        {"transmissivity": transmissivity, "bandwidth": bandwidth},
    )
    classical = linear_optics.classical_outcome_probability((1, 1), network[0], (1, 1))
    result.checks = [
        Check("dip_minimum", (transmissivity - reflectivity) ** 2, _coincidence(0.0), 1e-12),
        Check("baseline", transmissivity ** 2 + reflectivity ** 2, _coincidence(10.0), 1e-12),
        Check("classical_limit", classical, _coincidence(constants.ORTHOGONAL_DELAY), 1e-8),
        Check(
            "closed_form",
            0.0,
            max_deviation(result.column("coincidence"), result.column("closed_form")),
            1e-10,
        ),
        _flag(
            "dip_monotone",
            _monotone(result.column("delay"), result.column("coincidence"), increasing=True),
        ),
    ]
    return result


def run_bunching(
    pair_delay_scan: Scan = (0.0, 5.0, 26), bandwidth: float = 1.0, threads: int = 0
) -> ScanResult:
    """Same-port bunching of two photons and of two photon pairs on a 50:50 coupler

    Each ratio is the quantum same-port probability over the independent-particle value. The
    second photon (or the second pair) is delayed by the scanned ``sigma * tau``.
    """
    _require_bandwidth(bandwidth)
    network = [SplitterElement(0.5)]
    single_classical = linear_optics.classical_outcome_probability((1, 1), network[0], (2, 0))
    pair_classical = linear_optics.classical_outcome_probability((2, 2), network[0], (4, 0))

    def _two_photon_ratio(delay: float) -> float:
        return (
            temporal_modes.coincidence_with_distinguishability(
                _delayed_packets(bandwidth, (0.0, delay)), network, (2, 0)
            )
            / single_classical
        )

    def _pair_ratio(delay: float) -> float:
        return (
            temporal_modes.coincidence_with_distinguishability(
                _delayed_packets(bandwidth, (0.0, 0.0, delay, delay)),
                network,
                (4, 0),
                input_modes=(0, 1, 0, 1),
            )
            / pair_classical
        )

    def _row(delay: float):
        overlap_squared = math.exp(-(delay ** 2))
        return (
            delay,
            {
                "two_photon_ratio": _two_photon_ratio(delay),
                "two_photon_closed_form": two_photon_bunching_ratio(overlap_squared),
                "pair_ratio": _pair_ratio(delay),
                "pair_closed_form": pair_bunching_ratio(overlap_squared),
            },
        )

    rows = utilities.parallel_map(_row, list(utilities.scan_points(pair_delay_scan)), threads)
    result = ScanResult("bunching", "pair_delay", rows, {"bandwidth": bandwidth})
    result.checks = [
        Check("two_photon_ratio", 2.0, _two_photon_ratio(0.0), 1e-12),
        Check("ratio", 6.0, _pair_ratio(0.0), 1e-10),
        Check("ratio_distinguishable_pairs", 4.0, _pair_ratio(constants.ORTHOGONAL_DELAY), 1e-8),
        Check(
            "pair_closed_form",
            0.0,
            max_deviation(result.column("pair_ratio"), result.column("pair_closed_form")),
            1e-9,
        ),
        _flag(
            "pair_ratio_monotone",
            _monotone(result.column("pair_delay"), result.column("pair_ratio"), increasing=False),
        ),
    ]
    return result


def run_stimulated_emission(photons: int = 5) -> ScanResult:
    """Probability of all photons of ``|n, 1>`` leaving port 0 of a 50:50 coupler, ``n = 1..N``"""
    _require(1 <= photons <= 5, f"Photon number must be within 1..5, got {photons}")
    splitter = SplitterElement(0.5)
    rows = []
    checks = []
    for count in range(1, photons + 1):
        quantum = _splitter_probability((count, 1), (count + 1, 0), 0.5)
        classical = linear_optics.classical_outcome_probability(
            (count, 1), splitter, (count + 1, 0)
        )
        rows.append(
            (
                count,
                {"quantum": quantum, "classical": classical, "enhancement": quantum / classical},
            )
        )
        checks += [
            Check(f"quantum_{count}", stimulated_emission_probability(count), quantum, 1e-12),
            Check(f"classical_{count}", 0.5 ** (count + 1), classical, 1e-12),
            Check(f"enhancement_{count}", count + 1.0, quantum / classical, 1e-10),
        ]
    return ScanResult("stimulated_emission", "photons", rows, {}, checks)


def run_wang_kobayashi_null(transmissivity_scan: Scan = TRANSMISSIVITY_SCAN) -> ScanResult:
    """``P(2, 1)`` of ``|2, 1>`` across transmissivities and the location of its null"""
    amplitude = _splitter_amplitude((2, 1), (2, 1))
    rows = [
        (
            value,
            {
                "probability": _splitter_probability((2, 1), (2, 1), value),
                "closed_form": wang_kobayashi_probability(value),
            },
        )
        for value in utilities.scan_points(transmissivity_scan)
    ]
    null = scipy.optimize.bisect(amplitude, 0.5, 0.9, xtol=constants.ROOT_TOLERANCE)
    logger.info(f"Located the three-photon null at T = {null!r}")

    output = linear_optics.apply_splitter(
        fock_core.make_basis_state((2, 1)), SplitterElement(WANG_KOBAYASHI_NULL)
    )
    result = ScanResult("wang_kobayashi_null", "transmissivity", rows, {"null": null})
    result.checks = [
        Check("null_transmissivity", WANG_KOBAYASHI_NULL, null, 1e-10),
        Check("null_probability", 0.0, _splitter_probability((2, 1), (2, 1), null), 1e-12),
        Check("amplitude_3_0", -2.0 / 3.0, output.amplitude((3, 0)).real, 1e-12),
        Check("amplitude_0_3", math.sqrt(2.0) / 3.0, output.amplitude((0, 3)).real, 1e-12),
        Check("amplitude_1_2", math.sqrt(3.0) / 3.0, output.amplitude((1, 2)).real, 1e-12),
        Check(
            "closed_form",
            0.0,
            max_deviation(result.column("probability"), result.column("closed_form")),
            1e-12,
        ),
    ]
    return result


def run_fock_filter(
    input_coeffs: Sequence[complex] = (1.0, 1.0, 1.0),
    transmissivity: float = 2.0 / 3.0,
) -> Tuple[FockVector, ScanResult]:
    """Remove one photon-number component by mixing with a single ancilla photon

    The input ``sum_n c_n |n>`` enters port 0, one photon enters port 1, and the output is
    conditioned on exactly one photon leaving port 1. Component ``n`` is multiplied by
    ``sqrt(T^(n-1)) (T - nR)``, so ``|n0>`` with ``n0 = T / R`` is filtered out.

    :returns: Tuple of the (unnormalized) conditioned single-mode state and the per-component
              gains
    """
    coefficients = [complex(item) for item in input_coeffs]
    _require(0 < len(coefficients) <= 7, "Input must hold between 1 and 7 coefficients")
    _require(any(coefficients), "Input state must have at least one non-zero coefficient")
    state = fock_core.normalize(
        FockVector({(count, 1): value for count, value in enumerate(coefficients)}, 2)
    )
    output = linear_optics.apply_splitter(state, SplitterElement(transmissivity))
    projected, probability = linear_optics.postselect(output, {1: 1})
    conditioned = fock_core.reduce_modes(projected, (0,)) if len(projected) else FockVector({}, 1)

    rows = []
    for count, value in enumerate(coefficients):
        if value == 0:
            continue
        amplitude = conditioned.amplitude((count,))
        rows.append(
            (
                count,
                {
                    "gain": (amplitude / state.amplitude((count, 1))).real,
                    "closed_form": fock_filter_gain(transmissivity, count),
                },
            )
        )
    result = ScanResult(
        "fock_filter",
        "photons",
        rows,
        {"transmissivity": transmissivity, "success_probability": probability},
    )
    result.checks = [
        Check(
            "closed_form",
            0.0,
            max_deviation(result.column("gain"), result.column("closed_form")),
            1e-12,
        )
    ]
    if transmissivity < 1.0:
        ratio = transmissivity / (1.0 - transmissivity)
        filtered = round(ratio)
        if abs(ratio - filtered) < 1e-9 and filtered < len(coefficients):
            result.checks.append(
                Check("filtered_component", 0.0, abs(conditioned.amplitude((filtered,))), 1e-10)
            )
    return conditioned, result


def run_two_pair_null(transmissivity_scan: Scan = TRANSMISSIVITY_SCAN) -> ScanResult:
    """``P(2, 2)`` of ``|2, 2>`` across transmissivities and the location of both nulls"""
    amplitude = _splitter_amplitude((2, 2), (2, 2))
    rows = [
        (
            value,
            {
                "probability": _splitter_probability((2, 2), (2, 2), value),
                "closed_form": two_pair_probability(value),
            },
        )
        for value in utilities.scan_points(transmissivity_scan)
    ]
    lower = scipy.optimize.bisect(amplitude, 0.0, 0.5, xtol=constants.ROOT_TOLERANCE)
    upper = scipy.optimize.bisect(amplitude, 0.5, 1.0, xtol=constants.ROOT_TOLERANCE)
    logger.info(f"Located the two-pair nulls at T = {lower!r} and T = {upper!r}")

    result = ScanResult(
        "two_pair_null", "transmissivity", rows, {"lower_null": lower, "upper_null": upper}
    )
    result.checks = [
        Check("lower_null", TWO_PAIR_NULLS[0], lower, 1e-10),
        Check("upper_null", TWO_PAIR_NULLS[1], upper, 1e-10),
        Check("balanced_probability", 0.25, _splitter_probability((2, 2), (2, 2), 0.5), 1e-12),
        Check(
            "closed_form",
            0.0,
            max_deviation(result.column("probability"), result.column("closed_form")),
            1e-12,
        ),
    ]
    return result


def _fringe_checks(
    result: ScanResult, observable: str, photons: int
) -> Tuple[FitSummary, List[Check]]:
    phases = result.column("phase")
    values = result.column(observable)
    fit = fitting.fit_fringe(phases, values, 2 * photons)
    amplitudes = fitting.harmonic_amplitudes(phases, values, 2 * photons)
    principal = amplitudes[photons - 1]
    impurity = max(amplitudes[: photons - 1], default=0.0) / principal if principal else math.inf
    result.metadata["fit"] = fit.as_dict()
    return fit, [
        Check("period", 2.0 * math.pi / photons, fit.period, 1e-3 * 2.0 * math.pi / photons),
        Check("visibility", 1.0, fit.visibility, 1e-6),
        Check("harmonic_purity", 0.0, impurity, 1e-6),
    ]


def run_noon_fringe(
    photons: int = 4, phase_scan: Scan = FULL_PHASE_SCAN, threads: int = 0
) -> Tuple[ScanResult, FitSummary]:
    """Fringe of a NOON state with a phase shift on its second mode

    The observable is the probability of projecting back onto the unshifted NOON state.
    """
    _require(1 <= photons <= 6, f"Photon number must be within 1..6, got {photons}")
    _require(
        int(phase_scan[2]) > 4 * photons + 1,
        f"Phase scan needs more than {4 * photons + 1} points for {photons} photons",
    )
    reference = linear_optics.make_noon(photons)

    def _fringe(phase: float) -> float:
        shifted = linear_optics.apply_phase(reference, PhaseElement(1, phase))
        return abs(fock_core.inner_product(reference, shifted)) ** 2

    def _row(phase: float):
        return phase, {"probability": _fringe(phase), "closed_form": noon_fringe(photons, phase)}

    rows = utilities.parallel_map(_row, list(utilities.scan_points(phase_scan)), threads)
    result = ScanResult("noon_fringe", "phase", rows, {"photons": photons})
    fit, checks = _fringe_checks(result, "probability", photons)
    result.checks = [
        Check("fringe_at_zero", 1.0, _fringe(0.0), 1e-12),
        Check("fringe_at_half_period", 0.0, _fringe(math.pi / photons), 1e-12),
        Check(
            "closed_form",
            0.0,
            max_deviation(result.column("probability"), result.column("closed_form")),
            1e-12,
        ),
        *checks,
    ]
    return result, fit


def run_three_photon_noon_generation(
    alpha: complex = 0.05,
    eta_ratio_scan: Scan = (0.0, 2.0, 21),
    eta: Optional[complex] = None,
) -> ScanResult:
    """Three-photon NOON state from a weak coherent state and a down-converted pair

    The coherent state enters port 0 and the pair port 1 of a 50:50 coupler; the output is
    projected onto the three-photon shell. The scan parameter is the ratio
    ``eta sqrt(2) / alpha^2``, which cancels the middle terms at 1. An independent complex
    ``eta`` is evaluated on its own as well and reported in the metadata.

    :raises TruncationError: when the inputs carry too much weight above the three-photon shell
    """
    alpha = complex(alpha)

    def _eta(ratio: float) -> complex:
        return ratio * alpha ** 2 / math.sqrt(2.0)

    def _coefficients(pair_amplitude: complex) -> Tuple[Tuple[complex, ...], float]:
        error = truncation_error(alpha, pair_amplitude)
        if error > constants.TRUNCATION_LIMIT:
            raise exceptions.TruncationError(
                f"Inputs alpha={alpha!r}, eta={pair_amplitude!r} leave {error!r} of their "
                "weight above the three-photon shell"
            )
        shell = linear_optics.product_shell(
            linear_optics.coherent_state_shell(alpha, 3),
            linear_optics.pdc_state_shell(pair_amplitude, 3),
            3,
        )
        output = linear_optics.apply_splitter(shell, SplitterElement(0.5))
        coefficients = tuple(output.amplitude(item) for item in ((3, 0), (2, 1), (1, 2), (0, 3)))
        weight = sum(abs(item) ** 2 for item in coefficients)
        fidelity = (
            abs(coefficients[0] + coefficients[3]) ** 2 / (2.0 * weight) if weight else 0.0
        )
        return coefficients, fidelity

    def _deviation(pair_amplitude: complex, coefficients: Sequence[complex]) -> float:
        expected = three_photon_coefficients(alpha, pair_amplitude)
        return max(abs(left - right) for left, right in zip(coefficients, expected))

    rows = []
    deviations = []
    for ratio in utilities.scan_points(eta_ratio_scan):
        coefficients, fidelity = _coefficients(_eta(ratio))
        deviations.append(_deviation(_eta(ratio), coefficients))
        rows.append(
            (
                ratio,
                {
                    "coefficient_3_0": abs(coefficients[0]),
                    "coefficient_2_1": abs(coefficients[1]),
                    "coefficient_1_2": abs(coefficients[2]),
                    "coefficient_0_3": abs(coefficients[3]),
                    "noon_fidelity": fidelity,
                },
            )
        )

    result = ScanResult(
        "three_photon_noon_generation", "eta_ratio", rows, {"alpha": alpha}
    )
    at_null, fidelity_at_null = _coefficients(_eta(1.0))
    result.checks = [
        Check("middle_null", 0.0, abs(at_null[1]) + abs(at_null[2]), 1e-12),
        Check("closed_form", 0.0, max(deviations, default=0.0), 1e-12),
    ]
    if alpha != 0:
        result.checks.append(Check("fidelity_at_null", 1.0, fidelity_at_null, 1e-12))
    if eta is not None:
        eta = complex(eta)
        coefficients, fidelity = _coefficients(eta)
        result.metadata.update(
            {
                "eta": eta,
                "coefficients_at_eta": list(coefficients),
                "noon_fidelity_at_eta": fidelity,
            }
        )
        result.checks.append(
            Check("closed_form_at_eta", 0.0, _deviation(eta, coefficients), 1e-12)
        )
    return result


def _diagonal_state(photons: int, phase: float) -> FockVector:
    """``N`` photons polarized along the diagonal with phase ``phase`` on the second mode"""
    return FockVector(
        {
            (photons - count, count): math.sqrt(math.comb(photons, count) / 2.0 ** photons)
            * cmath.exp(1j * count * phase)
            for count in range(photons + 1)
        },
        2,
        normalized=True,
    )


def _projection_coincidence(scheme: str, photons: int) -> Callable[[float], float]:
    def _two_splitter(inputs, first, second, outcome):
        start = fock_core.make_basis_state(inputs)

        def _coincidence(phase: float) -> float:
            evolved = linear_optics.apply_network(
                start,
                [SplitterElement(first), PhaseElement(1, phase), SplitterElement(second)],
            )
            return fock_core.outcome_probability(evolved, outcome)

        return _coincidence

    if scheme == "three_photon_WK":
        return _two_splitter((2, 1), WANG_KOBAYASHI_NULL, WANG_KOBAYASHI_NULL, (1, 2))
    if scheme == "four_photon_asym":
        return _two_splitter((2, 2), TWO_PAIR_NULLS[1], 0.5, (2, 2))
    if scheme == "four_photon_symmetric":
        return _two_splitter((2, 2), 0.5, 0.5, (3, 1))
    if scheme == "noon_projection":
        return lambda phase: linear_optics.noon_projection_coincidence(
            _diagonal_state(photons, phase)
        )
    raise exceptions.UnknownSchemeError(
        f"Unknown projection scheme '{scheme}'; expected one of {', '.join(DE_BROGLIE_SCHEMES)}"
    )


def run_de_broglie_projection(
    scheme: str = "three_photon_WK",
    phase_scan: Scan = FULL_PHASE_SCAN,
    photons: int = 4,
    threads: int = 0,
) -> Tuple[ScanResult, FitSummary]:
    """N-photon fringe of a projection measurement

    ``three_photon_WK`` runs ``|2, 1>`` through two ``T = 2/3`` couplers and detects ``(1, 2)``;
    ``four_photon_asym`` runs ``|2, 2>`` through a coupler at a two-pair null and a 50:50
    coupler and detects ``(2, 2)``; ``four_photon_symmetric`` uses two 50:50 couplers and
    detects ``(3, 1)``. ``noon_projection`` sends ``photons`` diagonally polarized photons into
    the detector fan. The phase shift sits on the second mode.
    """
    coincidence = _projection_coincidence(scheme, photons)
    order = {"three_photon_WK": 3, "four_photon_asym": 4, "four_photon_symmetric": 4}.get(
        scheme, photons
    )
    _require(1 <= order <= 6, f"Photon number must be within 1..6, got {order}")
    _require(
        int(phase_scan[2]) > 4 * order + 1,
        f"Phase scan needs more than {4 * order + 1} points for {order} photons",
    )

    def _row(phase: float):
        return (
            phase,
            {
                "coincidence": coincidence(phase),
                "closed_form": de_broglie_fringe(scheme, phase, order),
            },
        )

    rows = utilities.parallel_map(_row, list(utilities.scan_points(phase_scan)), threads)
    result = ScanResult(
        "de_broglie_projection", "phase", rows, {"scheme": scheme, "photons": order}
    )
    fit, checks = _fringe_checks(result, "coincidence", order)
    scale = max(result.column("closed_form")) or 1.0
    result.checks = [
        Check(
            "closed_form",
            0.0,
            max_deviation(result.column("coincidence"), result.column("closed_form")) / scale,
            1e-9,
        ),
        *checks,
    ]
    return result, fit


def run_visibility_vs_distinguishability(
    scheme: str = "noon_projection",
    photons: int = 2,
    overlapping: int = 1,
    delay_scan: Scan = constants.DELAY_SCAN,
    bandwidth: float = 1.0,
    threads: int = 0,
) -> ScanResult:
    """Dip visibility of ``|1_H, N_V>`` as the H photon is delayed against the V photons

    Only ``overlapping`` of the ``N`` V photons share the H photon's packet at zero delay; the
    rest are parked far away. The reference line is the rate with the H photon distinguishable
    from every V photon. ``noon_projection`` detects one photon in each of the ``N + 1``
    detectors of the fan; ``asymmetric_bs`` mixes the V photons (port 0) and the H photon
    (port 1) on a coupler with ``R = 1 / (N + 1)`` and detects ``(N, 1)``.
    """
    _require(1 <= photons <= 4, f"Photon number must be within 1..4, got {photons}")
    _require_bandwidth(bandwidth)
    _require(
        0 <= overlapping <= photons,
        f"Overlapping photons must be within 0..{photons}, got {overlapping}",
    )
    if scheme == "noon_projection":
        network: linear_optics.Network = [NoonFanElement(photons + 1)]
        input_modes = (0,) + (1,) * photons
        occupation = (1, photons)
        pattern: Tuple[int, ...] = (1,) * (photons + 1)
    elif scheme == "asymmetric_bs":
        network = [SplitterElement(photons / (photons + 1.0))]
        input_modes = (1,) + (0,) * photons
        occupation = (photons, 1)
        pattern = (photons, 1)
    else:
        raise exceptions.UnknownSchemeError(
            f"Unknown visibility scheme '{scheme}'; expected one of {', '.join(VISIBILITY_SCHEMES)}"
        )

    far = (constants.ORTHOGONAL_DELAY,) * (photons - overlapping)
    near = (0.0,) * overlapping

    def _coincidence(delay: float) -> float:
        return temporal_modes.coincidence_with_distinguishability(
            _delayed_packets(bandwidth, (delay,) + near + far),
            network,
            pattern,
            input_modes=input_modes,
            mode_count=2,
        )

    baseline = _coincidence(-constants.ORTHOGONAL_DELAY)
    rows = utilities.parallel_map(
        lambda delay: (delay, {"coincidence": _coincidence(delay), "baseline": baseline}),
        list(utilities.scan_points(delay_scan)),
        threads,
    )
    visibility = (baseline - _coincidence(0.0)) / baseline
    classical = linear_optics.classical_distribution(occupation, network).get(pattern, 0.0)
    orthogonal = temporal_modes.coincidence_with_distinguishability(
        PacketSet.from_scenario(temporal_modes.DistinguishabilityScenario.orthogonal(photons + 1)),
        network,
        pattern,
        input_modes=input_modes,
        mode_count=2,
    )
    result = ScanResult(
        "visibility_vs_distinguishability",
        "delay",
        rows,
        {
            "scheme": scheme,
            "photons": photons,
            "overlapping": overlapping,
            "visibility": visibility,
        },
    )
    result.checks = [
        Check("visibility", overlapping / photons, visibility, 1e-6),
        Check("classical_limit", classical, orthogonal, 1e-8),
    ]
    return result


def _fringe_cdf(
    positions: numpy.ndarray, total: float, coherent: float, offset: float, spacing: float
) -> numpy.ndarray:
    wave = 2.0 * math.pi / spacing
    return (
        total * positions
        + coherent / wave * (numpy.sin(wave * (positions - offset)) + math.sin(wave * offset))
    ) / (total * spacing)


def _sample_fringe(
    rng: numpy.random.Generator,
    samples: int,
    total: float,
    coherent: float,
    offset: float,
    spacing: float,
) -> numpy.ndarray:
    """Inverse-CDF sampling of ``total + coherent cos(2 pi (x - x0) / L)`` over ``[0, L)``"""
    targets = rng.random(samples)
    low = numpy.zeros(samples)
    high = numpy.full(samples, spacing)
    for _ in range(_SAMPLER_STEPS):
        middle = 0.5 * (low + high)
        below = _fringe_cdf(middle, total, coherent, offset, spacing) < targets
        low = numpy.where(below, middle, low)
        high = numpy.where(below, high, middle)
    return 0.5 * (low + high)


def run_fringe_montecarlo(
    photons: int = 4,
    others: int = 4,
    indistinguishable: int = 2,
    partners: int = 2,
    samples: int = 10000,
    realizations: int = 100,
    seed: int = 0,
    bins: int = 32,
    threads: int = 0,
) -> Tuple[ScanResult, FitSummary]:
    """Single-realization fringes of two photon groups with partial indistinguishability

    Of ``photons`` photons in one group and ``others`` in the other, only ``indistinguishable``
    and ``partners`` respectively share a mode. Each realization draws a uniform fringe offset
    and ``samples`` detection positions from
    ``(n + m) + 2 sqrt(n_i m_i) cos(2 pi (x - x0) / L)``, histograms them and fits a cosine.
    The ``visibility`` column projects the fit onto the true fringe phase of the realization,
    a known-phase estimator that a measurement only has with an external phase reference. It
    stays unbiased when the fringe is weak or absent. The blind estimate, the magnitude of the
    fitted cosine, is kept as ``fitted_visibility`` and is biased upwards by counting noise.
    The known-phase visibility is turned into a degree of coherence
    ``V (n + m) / (2 sqrt(n m))``. Every realization draws from its own random stream seeded by
    ``(seed, index)``.
    """
    _require(photons >= 1 and others >= 1, "Both photon groups must be populated")
    _require(
        0 <= indistinguishable <= photons and 0 <= partners <= others,
        "Indistinguishable counts cannot exceed the group sizes",
    )
    _require(samples >= 1000, f"At least 1000 samples are required, got {samples}")
    _require(realizations >= 2, f"At least two realizations are required, got {realizations}")
    _require(bins >= 8, f"At least 8 histogram bins are required, got {bins}")

    spacing = 1.0
    total = float(photons + others)
    coherent = 2.0 * math.sqrt(indistinguishable * partners)
    edges = numpy.linspace(0.0, spacing, bins + 1)
    phases = 2.0 * math.pi * (edges[:-1] + edges[1:]) / (2.0 * spacing)
    # Histogramming scales a fringe by the average of the cosine over one bin
    bin_average = math.sin(math.pi / bins) / (math.pi / bins)

    def _realization(index: int):
        rng = numpy.random.default_rng(numpy.random.SeedSequence([seed, index]))
        offset = rng.uniform(0.0, spacing)
        positions = _sample_fringe(rng, samples, total, coherent, offset, spacing)
        counts, _ = numpy.histogram(positions, bins=edges)
        fit = fitting.fit_cosine(phases, counts, 1)
        # Known-phase projection; uses the drawn offset, not the fitted phase
        fringe_phase = 2.0 * math.pi * offset / spacing
        aligned = (
            fit.parameters["cosine"] * math.cos(fringe_phase)
            + fit.parameters["sine"] * math.sin(fringe_phase)
        ) / (fit.parameters["offset"] * bin_average)
        shifted, _ = numpy.histogram((positions - offset) % spacing, bins=edges)
        logger.debug(f"Realization {index}: offset {offset!r}, visibility {aligned!r}")
        return index, offset, fit.visibility / bin_average, aligned, shifted

    outcomes = utilities.parallel_map(_realization, list(range(realizations)), threads)
    normalization = 2.0 * math.sqrt(photons * others) / total
    rows = [
        (
            index,
            {
                "fringe_offset": offset,
                "fitted_visibility": fitted,
                "visibility": aligned,
                "coherence": aligned / normalization,
            },
        )
        for index, offset, fitted, aligned, _ in outcomes
    ]
    pooled = fitting.fit_cosine(phases, sum(item[4] for item in outcomes), 1)

    coherence = numpy.array([observables["coherence"] for _, observables in rows])
    mean = float(numpy.mean(coherence))
    error = float(numpy.std(coherence, ddof=1) / math.sqrt(realizations))
    result = ScanResult(
        "fringe_montecarlo",
        "realization",
        rows,
        {
            "seed": seed,
            "samples": samples,
            "realizations": realizations,
            "bins": bins,
            "coherence_mean": mean,
            "coherence_error": error,
            "fit": pooled.as_dict(),
        },
    )
    result.checks = [
        Check(
            "coherence",
            coherence_degree(photons, others, indistinguishable, partners),
            mean,
            3.0 * error,
        )
    ]
    return result, pooled


def run_hofmann_merge(photons: int = 5) -> ScanResult:
    """Projection probability of merging ``n = 1..N`` twisted photons into one mode"""
    _require(
        1 <= photons <= constants.MERGE_LIMIT,
        f"Photon number must be within 1..{constants.MERGE_LIMIT}, got {photons}",
    )
    rows = []
    checks = []
    for count in range(1, photons + 1):
        projected, probability = linear_optics.hofmann_merge(count)
        noon = linear_optics.make_noon(count, math.pi)
        overlap = abs(fock_core.inner_product(noon, fock_core.normalize(projected))) ** 2
        rows.append(
            (
                count,
                {
                    "probability": probability,
                    "closed_form": hofmann_probability(count),
                    "noon_overlap": overlap,
                },
            )
        )
        checks += [
            Check(f"probability_{count}", hofmann_probability(count), probability, 1e-12),
            Check(f"noon_overlap_{count}", 1.0, overlap, 1e-12),
        ]
    return ScanResult("hofmann_merge", "photons", rows, {}, checks)


def run_spectral_distinguishability(
    delay_scan: Scan = (0.0, 3.0, 31),
    bandwidth: float = 1.0,
    points: int = constants.GRID_POINTS,
    span: float = 8.0,
    threads: int = 0,
) -> ScanResult:
    """Exchange visibility of two delayed photons and pair ratio ``E/A`` of two delayed pairs

    Both follow ``exp(-sigma^2 tau^2)`` for Gaussian packets.
    """
    _require_bandwidth(bandwidth)
    reference = GaussianPacket(0.0, bandwidth, 0.0)
    together = temporal_modes.JointAmplitude.separable(reference, reference, points, span)

    def _row(delay: float):
        delayed = GaussianPacket(0.0, bandwidth, delay / bandwidth)
        visibility = temporal_modes.hom_visibility(
            temporal_modes.JointAmplitude.separable(reference, delayed, points, span)
        )
        normalization, exchange = temporal_modes.four_photon_pair_quantities(
            together, temporal_modes.JointAmplitude.separable(delayed, delayed, points, span)
        )
        return (
            delay,
            {
                "hom_visibility": visibility,
                "pair_ratio": exchange / normalization,
                "closed_form": math.exp(-(delay ** 2)),
            },
        )

    rows = utilities.parallel_map(_row, list(utilities.scan_points(delay_scan)), threads)
    single_normalization, single_exchange = temporal_modes.pair_quantities(together)
    result = ScanResult(
        "spectral_distinguishability",
        "delay",
        rows,
        {"bandwidth": bandwidth, "points": points, "span": span},
    )
    result.checks = [
        Check(
            "hom_visibility",
            0.0,
            max_deviation(result.column("hom_visibility"), result.column("closed_form")),
            1e-6,
        ),
        Check(
            "pair_ratio",
            0.0,
            max_deviation(result.column("pair_ratio"), result.column("closed_form")),
            1e-6,
        ),
        Check("separable_pair_ratio", 1.0, single_exchange / single_normalization, 1e-10),
    ]
    return result


# Registry


def _coefficients(value: Any) -> Tuple[complex, ...]:
    if isinstance(value, str):
        return tuple(
            complex(item.strip().replace(" ", "")) for item in value.split(",") if item.strip()
        )
    if isinstance(value, (list, tuple)):
        return tuple(complex(item) for item in value)
    return (complex(value),)


def _integer(value: Any) -> int:
    if isinstance(value, float) and not value.is_integer():
        raise ValueError(f"{value!r} is not an integer")
    return int(value)


@dataclasses.dataclass(frozen=True)
class Parameter:
    """Experiment parameter with its default and converter"""

    default: Any
    convert: Callable[[Any], Any]


@dataclasses.dataclass(frozen=True)
class Experiment:
    """Registered experiment

    :param name: Name used on the command line
    :param anchor: The interference effect the experiment reproduces
    :param law: Short description of the closed-form law it reproduces
    :param runner: Function producing the scan result
    :param parameters: Scalar parameters accepted by the runner
    :param scan_parameter: Name of the scanned parameter; the runner takes it as
                           ``<name>_scan``
    :param default_scan: Default ``(start, stop, steps)`` of the scan
    """

    name: str
    anchor: str
    law: str
    runner: Callable[..., Any]
    parameters: Mapping[str, Parameter]
    scan_parameter: Optional[str] = None
    default_scan: Optional[Scan] = None
    threaded: bool = True

    def schema(self) -> str:
        """Parameter schema as ``name=default`` pairs"""
        fields = [f"{name}={parameter.default}" for name, parameter in self.parameters.items()]
        if self.scan_parameter:
            start, stop, steps = self.default_scan
            fields.append(f"scan {self.scan_parameter}:{start:g}:{stop:g}:{steps}")
        return " ".join(fields)

    def execute(
        self,
        parameters: Mapping[str, Any],
        scan: Optional[Tuple[str, float, float, int]] = None,
        threads: int = 0,
    ) -> ScanResult:
        """Validate the parameters and run the experiment

        :raises InvalidParameterError: for unknown, malformed or out-of-range parameters
        """
        arguments: Dict[str, Any] = {}
        for name, value in parameters.items():
            if name not in self.parameters:
                raise exceptions.InvalidParameterError(
                    f"Experiment '{self.name}' has no parameter '{name}'; expected one of "
                    f"{', '.join(sorted(self.parameters)) or 'none'}"
                )
            try:
                arguments[name] = self.parameters[name].convert(value)
            except (TypeError, ValueError) as err:
                raise exceptions.InvalidParameterError(
                    f"Invalid value {value!r} for parameter '{name}': {err}"
                ) from None
        if scan is not None:
            name, start, stop, steps = scan
            if name != self.scan_parameter:
                raise exceptions.InvalidParameterError(
                    f"Experiment '{self.name}' cannot scan '{name}'"
                    + (f"; it scans '{self.scan_parameter}'" if self.scan_parameter else "")
                )
            if int(steps) < 2:
                raise exceptions.InvalidParameterError(
                    f"Scan needs at least two steps, got {steps}"
                )
            arguments[f"{name}_scan"] = (float(start), float(stop), int(steps))
        if self.threaded:
            arguments["threads"] = threads

        logger.info(f"Running experiment '{self.name}' with {arguments}")
        try:
            outcome = self.runner(**arguments)
        except (exceptions.NetworkError, exceptions.PacketError, exceptions.StateError) as err:
            raise exceptions.InvalidParameterError(str(err)) from err
        if isinstance(outcome, tuple):
            return next(item for item in outcome if isinstance(item, ScanResult))
        return outcome


REGISTRY: Dict[str, Experiment] = {
    item.name: item
    for item in (
        Experiment(
            "bunching",
            "two-photon and two-pair bunching",
            "same-port ratio 2 for two photons, 6 -> 4 for two pairs as they separate",
            run_bunching,
            {"bandwidth": Parameter(1.0, float)},
            "pair_delay",
            (0.0, 5.0, 26),
        ),
        Experiment(
            "de_broglie_projection",
            "de Broglie wavelength projection",
            "projection fringes with period 2 pi / N",
            run_de_broglie_projection,
            {"scheme": Parameter("three_photon_WK", str), "photons": Parameter(4, _integer)},
            "phase",
            FULL_PHASE_SCAN,
        ),
        Experiment(
            "fock_filter",
            "Fock-state filter",
            "component n scaled by sqrt(T^(n-1)) (T - nR)",
            run_fock_filter,
            {
                "input_coeffs": Parameter("1,1,1", _coefficients),
                "transmissivity": Parameter(2.0 / 3.0, float),
            },
            threaded=False,
        ),
        Experiment(
            "fringe_montecarlo",
            "single-shot fringes of partially coherent groups",
            "degree of coherence sqrt(n m / (N M))",
            run_fringe_montecarlo,
            {
                "photons": Parameter(4, _integer),
                "others": Parameter(4, _integer),
                "indistinguishable": Parameter(2, _integer),
                "partners": Parameter(2, _integer),
                "samples": Parameter(10000, _integer),
                "realizations": Parameter(100, _integer),
                "seed": Parameter(0, _integer),
                "bins": Parameter(32, _integer),
            },
        ),
        Experiment(
            "hofmann_merge",
            "twisted-photon NOON merge",
            "merge projection probability 2 N! / (2N)^N",
            run_hofmann_merge,
            {"photons": Parameter(5, _integer)},
            threaded=False,
        ),
        Experiment(
            "hom_dip",
            "Hong-Ou-Mandel dip",
            "coincidence (T - R)^2 at zero delay, T^2 + R^2 far away",
            run_hom_dip,
            {"transmissivity": Parameter(0.5, float), "bandwidth": Parameter(1.0, float)},
            "delay",
            constants.DELAY_SCAN,
        ),
        Experiment(
            "noon_fringe",
            "NOON state interferometry",
            "NOON fringe (1 + cos N phi) / 2",
            run_noon_fringe,
            {"photons": Parameter(4, _integer)},
            "phase",
            FULL_PHASE_SCAN,
        ),
        Experiment(
            "pfleegor_mandel",
            "two-laser intensity correlation",
            "two-laser correlation 0.5 cos(2 pi dx / L)",
            run_pfleegor_mandel,
            {"fringe_spacing": Parameter(1.0, float)},
            "separation",
            (0.0, 2.0, 41),
        ),
        Experiment(
            "spectral_distinguishability",
            "spectral exchange overlap",
            "exchange visibility and E/A equal exp(-sigma^2 tau^2)",
            run_spectral_distinguishability,
            {
                "bandwidth": Parameter(1.0, float),
                "points": Parameter(constants.GRID_POINTS, _integer),
                "span": Parameter(8.0, float),
            },
            "delay",
            (0.0, 3.0, 31),
        ),
        Experiment(
            "stimulated_emission",
            "stimulated-emission enhancement",
            "(N + 1)-fold enhancement (N + 1) / 2^(N + 1)",
            run_stimulated_emission,
            {"photons": Parameter(5, _integer)},
            threaded=False,
        ),
        Experiment(
            "three_photon_noon_generation",
            "NOON generation from coherent light and pairs",
            "middle terms vanish at alpha^2 = eta sqrt 2",
            run_three_photon_noon_generation,
            {"alpha": Parameter(0.05, complex), "eta": Parameter(None, complex)},
            "eta_ratio",
            (0.0, 2.0, 21),
            threaded=False,
        ),
        Experiment(
            "two_pair_null",
            "two-pair interference null",
            "P(2,2) nulls at T = (3 +/- sqrt 3) / 6",
            run_two_pair_null,
            {},
            "transmissivity",
            TRANSMISSIVITY_SCAN,
            threaded=False,
        ),
        Experiment(
            "visibility_vs_distinguishability",
            "visibility versus partial distinguishability",
            "dip visibility m / N",
            run_visibility_vs_distinguishability,
            {
                "scheme": Parameter("noon_projection", str),
                "photons": Parameter(2, _integer),
                "overlapping": Parameter(1, _integer),
                "bandwidth": Parameter(1.0, float),
            },
            "delay",
            constants.DELAY_SCAN,
        ),
        Experiment(
            "wang_kobayashi_null",
            "three-photon unbalanced-coupler null",
            "P(2,1) = T (T - 2R)^2, null at T = 2/3",
            run_wang_kobayashi_null,
            {},
            "transmissivity",
            TRANSMISSIVITY_SCAN,
            threaded=False,
        ),
    )
}


def get_experiment(name: str) -> Experiment:
    """Look up a registered experiment

    :raises UnknownExperimentError: when no experiment has that name
    """
    try:
        return REGISTRY[name]
    except KeyError:
        raise exceptions.UnknownExperimentError(
            f"Unknown experiment '{name}'; run 'list' to see the available experiments"
        ) from None


def list_experiments() -> str:
    """One line per registered experiment in alphabetical order"""
    width = max(len(name) for name in REGISTRY)
    return "\n".join(
        f"{name.ljust(width)}  ({REGISTRY[name].anchor}) {REGISTRY[name].law}  "
        f"[{REGISTRY[name].schema()}]"
        for name in sorted(REGISTRY)
    )
