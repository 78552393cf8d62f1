# pylint: disable=missing-module-docstring
import math

import numpy
import pytest

from multiphoton_interference import exceptions
from multiphoton_interference import fitting


PHASES = numpy.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)


def test_fit_cosine_exact():
    """Test that a noiseless fringe is recovered exactly"""
    values = 2.0 + 1.5 * numpy.cos(3.0 * PHASES - 0.4)
    fit = fitting.fit_cosine(PHASES, values, 3)

    assert fit.parameters["offset"] == pytest.approx(2.0)
    assert fit.parameters["amplitude"] == pytest.approx(1.5)
    assert fit.parameters["phase"] == pytest.approx(0.4)
    assert fit.residual_norm == pytest.approx(0.0, abs=1e-10)
    assert fit.visibility == pytest.approx(0.75)
    assert fit.period == pytest.approx(2.0 * math.pi / 3.0)
    assert fit.errors["amplitude"] == pytest.approx(0.0, abs=1e-10)


def test_fit_cosine_noise():
    """Test that standard errors cover the truth for a noisy fringe"""
    rng = numpy.random.default_rng(11)
    values = 1.0 + 0.5 * numpy.cos(PHASES) + rng.normal(scale=0.01, size=PHASES.size)
    fit = fitting.fit_cosine(PHASES, values, 1)

    assert fit.errors["offset"] == pytest.approx(0.01 / math.sqrt(PHASES.size), rel=0.5)
    assert abs(fit.parameters["amplitude"] - 0.5) < 5.0 * fit.errors["amplitude"]


def test_fit_cosine_too_few_samples():
    """Test that an underdetermined fit is refused"""
    with pytest.raises(exceptions.InvalidParameterError):
        fitting.fit_cosine([0.0, 1.0, 2.0], [1.0, 2.0, 3.0], 1)

    with pytest.raises(exceptions.InvalidParameterError):
        fitting.fit_cosine(PHASES, PHASES[:-1], 1)


def test_nonpositive_offset():
    """Test that a fringe without a positive offset reports zero visibility"""
    fit = fitting.fit_cosine(PHASES, numpy.cos(PHASES) - 1.0, 1)
    assert fit.visibility == 0.0


@pytest.mark.parametrize("harmonic", [1, 2, 4, 6])
def test_fit_fringe_selects_harmonic(harmonic):
    """Test that the harmonic with the smallest residual is selected"""
    values = 0.5 * (1.0 + numpy.cos(harmonic * PHASES))
    fit = fitting.fit_fringe(PHASES, values, 8)
    assert fit.harmonic == harmonic
    assert fit.visibility == pytest.approx(1.0)


def test_fit_fringe_ties():
    """Test that a flat signal is assigned to the lowest harmonic"""
    fit = fitting.fit_fringe(PHASES, numpy.full(PHASES.size, 3.0), 4)
    assert fit.harmonic == 1
    assert fit.visibility == pytest.approx(0.0, abs=1e-12)


def test_harmonic_amplitudes():
    """Test the simultaneous decomposition into harmonics"""
    values = 1.0 + 0.3 * numpy.cos(PHASES) + 0.2 * numpy.sin(4.0 * PHASES)
    amplitudes = fitting.harmonic_amplitudes(PHASES, values, 5)

    assert amplitudes.shape == (5,)
    assert numpy.allclose(amplitudes, [0.3, 0.0, 0.0, 0.2, 0.0], atol=1e-12)

    with pytest.raises(exceptions.InvalidParameterError):
        fitting.harmonic_amplitudes(PHASES[:9], values[:9], 4)


def test_summary_mapping():
    """Test the plain mapping written into run summaries"""
    fit = fitting.fit_cosine(PHASES, 1.0 + numpy.cos(2.0 * PHASES), 2)
    summary = fit.as_dict()
    assert summary["harmonic"] == 2
    assert summary["visibility"] == pytest.approx(1.0)
    assert set(summary["parameters"]) == {"offset", "cosine", "sine", "amplitude", "phase"}
