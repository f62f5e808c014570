"""
Complex vectors, the zero-padded DFT, and the raised-cosine window family.

The window family is w(n) = 1 - 2*alpha*cos(2*pi*n/N) with 0 <= alpha <= 1/2;
alpha = 0 is the rectangular window and alpha = 1/2 the (periodic) Hanning
window. Because its transform has only three impulses, windowing can be
applied to an N-point spectrum as a three-tap combination of bins K apart.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, ConstraintViolation, SizeError

logger = logging.getLogger(__name__)

ALPHA_MAX = 0.5


def complex_vector(samples):
    """Validate ``samples`` and return them as a read-only 1-D complex array."""
    x = np.array(samples, dtype=complex).ravel()
    if x.size < 1:
        raise SizeError("complex vector must hold at least one sample")
    if not np.all(np.isfinite(x)):
        raise SizeError("complex vector contains NaN or Inf")
    x.setflags(write=False)
    return x


def check_alpha(alpha):
    if not 0.0 <= alpha <= ALPHA_MAX:
        raise ConstraintViolation(f"alpha={alpha} outside [0, 1/2]")
    return float(alpha)


@dataclass(frozen=True, eq=False)
class ComplexSpectrum:
    """N complex DFT samples; bin offsets wrap modulo N."""

    bins: np.ndarray

    def __post_init__(self):
        bins = np.array(self.bins, dtype=complex).ravel()
        if bins.size < 1:
            raise SizeError("spectrum must hold at least one bin")
        bins.setflags(write=False)
        object.__setattr__(self, 'bins', bins)

    @property
    def dft_size(self):
        return self.bins.size

    def __len__(self):
        return self.bins.size

    def __getitem__(self, k):
        return self.bins[k % self.bins.size]

    def shifted(self, offset):
        """Array whose element k is X[k + offset] (circular)."""
        return np.roll(self.bins, -offset)

    def magnitude(self):
        return np.abs(self.bins)


@dataclass(frozen=True)
class RaisedCosineWindow:
    alpha: float
    length: int

    def __post_init__(self):
        check_alpha(self.alpha)
        if self.length < 1:
            raise SizeError(f"window length must be positive, got {self.length}")

    @property
    def weights(self):
        return raised_cosine_weights(self.alpha, self.length)


def raised_cosine_weights(alpha, n):
    check_alpha(alpha)
    if n < 1:
        raise SizeError(f"window length must be positive, got {n}")
    i = np.arange(n)
    return 1.0 - 2.0 * alpha * np.cos(2.0 * np.pi * i / n)


def dft(x, n):
    """N-point DFT of ``x`` zero-padded to ``n``; forward sign negative, unnormalized."""
    x = complex_vector(x)
    if n < x.size:
        raise SizeError(f"DFT size {n} is smaller than the signal length {x.size}")
    return ComplexSpectrum(np.fft.fft(x, n))


def idft(spectrum):
    """Inverse of `dft`, carrying the 1/N factor."""
    return np.fft.ifft(spectrum.bins)


def apply_window_time(x, window):
    x = complex_vector(x)
    if x.size != window.length:
        raise SizeError(f"signal length {x.size} != window length {window.length}")
    return complex_vector(x * window.weights)


def apply_window_freq(spectrum, k, big_k, alpha):
    """Windowed value of bin ``k``: -alpha*X[k-K] + X[k] - alpha*X[k+K]."""
    return -alpha * spectrum[k - big_k] + spectrum[k] - alpha * spectrum[k + big_k]


def apply_window_freq_all(spectrum, big_k, alpha):
    check_alpha(alpha)
    bins = spectrum.bins - alpha * (spectrum.shifted(-big_k) + spectrum.shifted(big_k))
    return ComplexSpectrum(bins)


def neighbour_sum(spectrum, big_k):
    """S[k] = X[k-K] + X[k+K] for every bin."""
    return spectrum.shifted(-big_k) + spectrum.shifted(big_k)


def padding_factor(n, m):
    """Zero-padding factor K = N/M; N has to be an integer multiple of M."""
    if m < 1 or n < m or n % m:
        raise ConfigurationError(
            f"DFT size N={n} must be an integer multiple of the sensor count M={m}"
        )
    return n // m
