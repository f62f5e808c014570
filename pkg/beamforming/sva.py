"""
Spatially variant apodization on an N-point spectrum.

For every bin the raised-cosine weight alpha that minimizes the windowed
magnitude |X[k] - alpha*S[k]|, S[k] = X[k-K] + X[k+K], is found in closed
form and clamped to [0, 1/2]. Two variants exist: "I-Q jointly" minimizes
the complex magnitude, "I-Q separately" treats the in-phase and quadrature
components as two real problems.
"""

import enum
import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import ConstraintViolation, SizeError
from .spectral import (
    ALPHA_MAX,
    ComplexSpectrum,
    RaisedCosineWindow,
    apply_window_time,
    check_alpha,
    complex_vector,
    dft,
    neighbour_sum,
)

logger = logging.getLogger(__name__)

# Returned by sva_alpha when S[k] is (near) zero; selects the pass-through case.
DEGENERATE_ALPHA = -1.0

DEFAULT_DENOM_EPSILON = 1e-12


class SvaMode(enum.Enum):
    JOINTLY = 'jointly'
    SEPARATELY = 'separately'


@dataclass(frozen=True)
class SvaOptions:
    mode: SvaMode = SvaMode.JOINTLY
    dft_size: int = 1024
    padding_factor: int = 16
    denom_epsilon: float = DEFAULT_DENOM_EPSILON

    def __post_init__(self):
        object.__setattr__(self, 'mode', SvaMode(self.mode))
        if self.dft_size < 1:
            raise SizeError(f"dft_size must be positive, got {self.dft_size}")
        if self.padding_factor < 1:
            raise SizeError(f"padding_factor must be positive, got {self.padding_factor}")
        if not self.denom_epsilon > 0:
            raise ConstraintViolation(f"denom_epsilon must be > 0, got {self.denom_epsilon}")


@dataclass(frozen=True, eq=False)
class SvaResult:
    output: ComplexSpectrum
    alphas: np.ndarray
    mode: SvaMode
    case_counts: dict = field(default_factory=dict)


def _degenerate_threshold(bins, eps):
    return eps * np.mean(np.abs(bins))


def _ratio(num, den, threshold):
    """num/den with DEGENERATE_ALPHA wherever |den| <= threshold."""
    degenerate = np.abs(den) <= threshold
    safe = np.where(degenerate, 1.0, den)
    return np.where(degenerate, DEGENERATE_ALPHA, num / safe)


def sva_alpha(spectrum, k, big_k, eps=DEFAULT_DENOM_EPSILON):
    """Unclamped optimal alpha of bin ``k``: Re{X[k] / (X[k-K] + X[k+K])}."""
    s = spectrum[k - big_k] + spectrum[k + big_k]
    if abs(s) <= _degenerate_threshold(spectrum.bins, eps):
        return DEGENERATE_ALPHA
    return float(np.real(spectrum[k] / s))


def sva_alphas(spectrum, big_k, eps=DEFAULT_DENOM_EPSILON):
    """Vectorized `sva_alpha` over every bin."""
    s = neighbour_sum(spectrum, big_k)
    threshold = _degenerate_threshold(spectrum.bins, eps)
    return np.real(_ratio(spectrum.bins, s, threshold))


def _case_counts(alpha):
    return {
        'passthrough': int(np.count_nonzero(alpha < 0)),
        'optimal': int(np.count_nonzero((alpha >= 0) & (alpha <= ALPHA_MAX))),
        'clamped': int(np.count_nonzero(alpha > ALPHA_MAX)),
    }


def _min_abs(candidate, reference):
    # keeps |output| <= |input| exact under rounding
    return np.where(np.abs(candidate) <= np.abs(reference), candidate, reference)


def _check_size(spectrum, opts):
    if spectrum.dft_size != opts.dft_size:
        raise SizeError(f"spectrum has {spectrum.dft_size} bins, options expect {opts.dft_size}")


def sva_jointly(spectrum, opts):
    _check_size(spectrum, opts)
    x = spectrum.bins
    s = neighbour_sum(spectrum, opts.padding_factor)
    alpha = np.real(_ratio(x, s, _degenerate_threshold(x, opts.denom_epsilon)))

    clamped = np.clip(alpha, 0.0, ALPHA_MAX)
    candidate = np.where(alpha < 0, x, x - clamped * s)
    output = _min_abs(candidate, x)

    counts = _case_counts(alpha)
    logger.debug("I-Q jointly SVA over %d bins: %s", x.size, counts)
    return SvaResult(ComplexSpectrum(output), clamped, SvaMode.JOINTLY, counts)


def _separate_component(x, s, threshold):
    alpha = _ratio(x, s, threshold)
    y = np.where(alpha < 0, x, np.where(alpha <= ALPHA_MAX, 0.0, x - 0.5 * s))
    return _min_abs(y, x), alpha


def sva_separately(spectrum, opts):
    _check_size(spectrum, opts)
    x = spectrum.bins
    s = neighbour_sum(spectrum, opts.padding_factor)
    threshold = _degenerate_threshold(x, opts.denom_epsilon)

    y_re, alpha_re = _separate_component(x.real, s.real, threshold)
    y_im, alpha_im = _separate_component(x.imag, s.imag, threshold)

    record = 0.5 * (np.clip(alpha_re, 0.0, ALPHA_MAX) + np.clip(alpha_im, 0.0, ALPHA_MAX))
    counts = _case_counts(alpha_re)
    for name, n in _case_counts(alpha_im).items():
        counts[name] += n
    logger.debug("I-Q separately SVA over %d bins: %s", x.size, counts)
    return SvaResult(ComplexSpectrum(y_re + 1j * y_im), record, SvaMode.SEPARATELY, counts)


def apply_sva(spectrum, opts):
    if opts.mode is SvaMode.SEPARATELY:
        return sva_separately(spectrum, opts)
    return sva_jointly(spectrum, opts)


def multi_apodization_oracle(x, alpha_grid, n):
    """
    Brute-force multi-apodization: per bin, keep the windowed DFT value of
    smallest magnitude over every alpha in ``alpha_grid``.
    """
    x = complex_vector(x)
    grid = [check_alpha(a) for a in alpha_grid]
    if not grid:
        raise SizeError("alpha grid is empty")
    if 0.0 not in grid:
        raise ConstraintViolation("alpha grid has to include 0 (the rectangular window)")

    candidates = np.stack([
        dft(apply_window_time(x, RaisedCosineWindow(a, x.size)), n).bins for a in grid
    ])
    best = np.argmin(np.abs(candidates), axis=0)
    return ComplexSpectrum(candidates[best, np.arange(n)])
