"""Linear least-squares fringe fits

Fringes are fitted against the regressors ``(1, cos k phi, sin k phi)`` for a fixed integer
harmonic ``k``; no nonlinear optimization is involved. The harmonic of a fringe is selected
by the smallest residual over a range of candidates.
"""
import dataclasses
import math
from typing import Dict

import numpy

from multiphoton_interference import exceptions
from multiphoton_interference import logger


@dataclasses.dataclass(frozen=True)
class FitSummary:
    """Result of a cosine fit

    :param model: Human readable model string
    :param parameters: Fitted values keyed by name (``offset``, ``cosine``, ``sine``,
                       ``amplitude``, ``phase``)
    :param errors: Standard errors of the fitted values, same keys
    :param residual_norm: Euclidean norm of the fit residuals
    :param harmonic: Harmonic ``k`` the fringe was fitted at
    """

    model: str
    parameters: Dict[str, float]
    errors: Dict[str, float]
    residual_norm: float
    harmonic: int

    @property
    def period(self) -> float:
        """Fringe period in the fitted phase variable"""
        return 2.0 * math.pi / self.harmonic

    @property
    def visibility(self) -> float:
        """``(max - min) / (max + min)`` of the fitted fringe, zero for a non-positive offset"""
        offset = self.parameters["offset"]
        return self.parameters["amplitude"] / offset if offset > 0.0 else 0.0

    def as_dict(self) -> Dict[str, object]:
        """Plain mapping for the run summary"""
        return {
            "model": self.model,
            "parameters": dict(self.parameters),
            "errors": dict(self.errors),
            "residual_norm": self.residual_norm,
            "harmonic": self.harmonic,
            "period": self.period,
            "visibility": self.visibility,
        }


def _design(phases: numpy.ndarray, harmonics) -> numpy.ndarray:
    columns = [numpy.ones_like(phases)]
    for harmonic in harmonics:
        columns += [numpy.cos(harmonic * phases), numpy.sin(harmonic * phases)]
    return numpy.column_stack(columns)


def fit_cosine(phases, values, harmonic: int) -> FitSummary:
    """Fit ``offset + cosine cos(k phi) + sine sin(k phi)`` at a fixed harmonic

    :param phases: Phase samples
    :param values: Observed values at the phase samples
    :param harmonic: Integer harmonic ``k`` of the fringe
    :raises InvalidParameterError: when there are too few samples for the three regressors
    """
    phases = numpy.asarray(phases, dtype=float)
    values = numpy.asarray(values, dtype=float)
    if len(phases) != len(values) or len(phases) <= 3:
        raise exceptions.InvalidParameterError(
            f"Cosine fit needs more than three matching samples, got {len(phases)} phases "
            f"and {len(values)} values"
        )
    design = _design(phases, (harmonic,))
    coefficients, _, _, _ = numpy.linalg.lstsq(design, values, rcond=None)
    residuals = values - design @ coefficients
    residual_norm = float(numpy.linalg.norm(residuals))

    variance = residual_norm ** 2 / (len(values) - design.shape[1])
    covariance = variance * numpy.linalg.pinv(design.T @ design)
    offset, cosine, sine = (float(item) for item in coefficients)
    offset_error, cosine_error, sine_error = (
        float(item) for item in numpy.sqrt(numpy.abs(numpy.diag(covariance)))
    )
    amplitude = math.hypot(cosine, sine)
    amplitude_error = (
        math.hypot(cosine * cosine_error, sine * sine_error) / amplitude if amplitude else 0.0
    )
    return FitSummary(
        model=f"offset+amplitude*cos({harmonic}*phi-phase)",
        parameters={
            "offset": offset,
            "cosine": cosine,
            "sine": sine,
            "amplitude": amplitude,
            "phase": math.atan2(sine, cosine),
        },
        errors={
            "offset": offset_error,
            "cosine": cosine_error,
            "sine": sine_error,
            "amplitude": amplitude_error,
        },
        residual_norm=residual_norm,
        harmonic=harmonic,
    )


def fit_fringe(phases, values, max_harmonic: int) -> FitSummary:
    """Fit a fringe at every harmonic ``1..max_harmonic`` and keep the smallest residual

    Ties go to the lowest harmonic.
    """
    best = fit_cosine(phases, values, 1)
    scale = float(numpy.linalg.norm(values)) or 1.0
    for harmonic in range(2, max_harmonic + 1):
        candidate = fit_cosine(phases, values, harmonic)
        if candidate.residual_norm < best.residual_norm - 1e-12 * scale:
            best = candidate
    logger.debug(
        f"Selected harmonic {best.harmonic} with residual {best.residual_norm!r} "
        f"out of {max_harmonic} candidates"
    )
    return best


def harmonic_amplitudes(phases, values, max_harmonic: int) -> numpy.ndarray:
    """Amplitudes of harmonics ``1..max_harmonic`` from one simultaneous fit

    :returns: Array whose entry ``k - 1`` is the amplitude of harmonic ``k``
    :raises InvalidParameterError: when the fit is underdetermined
    """
    phases = numpy.asarray(phases, dtype=float)
    values = numpy.asarray(values, dtype=float)
    if len(phases) <= 2 * max_harmonic + 1:
        raise exceptions.InvalidParameterError(
            f"{len(phases)} samples cannot resolve {max_harmonic} harmonics"
        )
    design = _design(phases, range(1, max_harmonic + 1))
    coefficients, _, _, _ = numpy.linalg.lstsq(design, values, rcond=None)
    return numpy.hypot(coefficients[1::2], coefficients[2::2])
