import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from beamforming.errors import EXIT_NUMERICAL, ConfigurationError, ConstraintViolation, SizeError
from beamforming.spectral import (
    ComplexSpectrum,
    RaisedCosineWindow,
    apply_window_freq,
    apply_window_freq_all,
    apply_window_time,
    complex_vector,
    dft,
    idft,
    padding_factor,
    raised_cosine_weights,
)

from .conftest import random_complex


def test_raised_cosine_weights():
    assert_array_equal(raised_cosine_weights(0.0, 8), np.ones(8))

    w = raised_cosine_weights(0.5, 8)
    assert w[0] == 0.0
    assert w[4] == pytest.approx(2.0)

    i = np.arange(10)
    assert_allclose(raised_cosine_weights(0.3, 10), 1 - 0.6 * np.cos(2 * np.pi * i / 10))


@pytest.mark.parametrize('alpha', [-0.01, 0.51, 1.0])
def test_raised_cosine_weights_rejects_alpha(alpha):
    with pytest.raises(ConstraintViolation):
        raised_cosine_weights(alpha, 8)
    with pytest.raises(ConstraintViolation):
        RaisedCosineWindow(alpha, 8)


def test_complex_vector_validation():
    with pytest.raises(SizeError):
        complex_vector([])
    with pytest.raises(SizeError):
        complex_vector([1.0, np.nan])
    with pytest.raises(SizeError):
        complex_vector([1.0, np.inf])

    x = complex_vector([1, 2])
    assert x.dtype == complex
    assert not x.flags.writeable


def test_dft_examples():
    assert_allclose(dft([1], 4).bins, np.ones(4))
    assert_allclose(dft([1, 1, 1, 1], 4).bins, [4, 0, 0, 0], atol=1e-12)

    x = np.exp(2j * np.pi * 0.25 * np.arange(4))
    spectrum = dft(x, 8)
    assert np.argmax(spectrum.magnitude()) == 2
    assert abs(spectrum[2]) == pytest.approx(4.0)


def test_dft_matches_direct_sum(rng):
    x = random_complex(rng, 12)
    n = 40
    k = np.arange(n)[:, None]
    m = np.arange(x.size)[None, :]
    direct = np.exp(-2j * np.pi * k * m / n) @ x
    assert_allclose(dft(x, n).bins, direct, atol=1e-10)


def test_dft_is_linear(rng):
    a = random_complex(rng, 16)
    b = random_complex(rng, 16)
    combined = dft(2 * a - 3j * b, 128).bins
    assert_allclose(combined, 2 * dft(a, 128).bins - 3j * dft(b, 128).bins, atol=1e-10)


def test_dft_rejects_short_size():
    with pytest.raises(SizeError):
        dft(np.ones(8), 4)


def test_idft_and_parseval(rng):
    x = random_complex(rng, 16)
    spectrum = dft(x, 64)
    padded = np.concatenate([x, np.zeros(48)])
    assert_allclose(idft(spectrum), padded, atol=1e-10)
    assert np.sum(np.abs(x) ** 2) == pytest.approx(np.sum(spectrum.magnitude() ** 2) / 64, rel=1e-10)


def test_spectrum_indexing_is_circular():
    spectrum = ComplexSpectrum(np.arange(8))
    assert spectrum.dft_size == 8
    assert spectrum[-1] == 7
    assert spectrum[9] == 1
    assert_array_equal(spectrum.shifted(3).real, [3, 4, 5, 6, 7, 0, 1, 2])
    assert_array_equal(spectrum.shifted(-1).real, [7, 0, 1, 2, 3, 4, 5, 6])


def test_apply_window_time():
    assert_array_equal(apply_window_time([1, 1, 1, 1], RaisedCosineWindow(0.0, 4)), [1, 1, 1, 1])
    assert_allclose(apply_window_time([2, 2, 2, 2], RaisedCosineWindow(0.5, 4)), [0, 2, 4, 2], atol=1e-12)

    with pytest.raises(SizeError):
        apply_window_time([1, 2, 3], RaisedCosineWindow(0.5, 4))


def test_apply_window_freq_examples():
    # bin 4 of an 8-point spectrum with K = 2 reads bins 2 and 6
    bins = np.zeros(8, dtype=complex)
    bins[4] = 1
    assert apply_window_freq(ComplexSpectrum(bins), 4, 2, 0.37) == 1

    bins[2] = bins[6] = 1
    assert apply_window_freq(ComplexSpectrum(bins), 4, 2, 0.5) == 0

    bins[4], bins[2], bins[6] = 2, 1, -1
    assert apply_window_freq(ComplexSpectrum(bins), 4, 2, 0.3) == pytest.approx(2)


def test_apply_window_freq_wraps_around():
    bins = np.zeros(8, dtype=complex)
    bins[0], bins[6], bins[2] = 1, 1, 1
    assert apply_window_freq(ComplexSpectrum(bins), 0, 2, 0.5) == 0


def test_apply_window_freq_is_linear(rng):
    a = ComplexSpectrum(random_complex(rng, 32))
    b = ComplexSpectrum(random_complex(rng, 32))
    total = ComplexSpectrum(2 * a.bins - 3j * b.bins)
    for k in range(32):
        expected = 2 * apply_window_freq(a, k, 4, 0.2) - 3j * apply_window_freq(b, k, 4, 0.2)
        assert apply_window_freq(total, k, 4, 0.2) == pytest.approx(expected)


def test_time_and_frequency_windowing_agree(rng):
    for _ in range(100):
        m = int(rng.integers(2, 33))
        n = 8 * m
        alpha = float(rng.uniform(0.0, 0.5))
        x = random_complex(rng, m)

        in_time = dft(apply_window_time(x, RaisedCosineWindow(alpha, m)), n).bins
        in_freq = apply_window_freq_all(dft(x, n), 8, alpha).bins
        scale = np.abs(in_time).max()
        assert np.abs(in_time - in_freq).max() <= 1e-10 * scale


def test_padding_factor():
    assert padding_factor(1024, 64) == 16
    assert padding_factor(128, 16) == 8

    with pytest.raises(ConfigurationError) as excinfo:
        padding_factor(1000, 64)
    assert excinfo.value.exit_code == EXIT_NUMERICAL
