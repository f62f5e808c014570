"""
DFT-based beamforming for a uniform linear array.

The conventional beamformer output X_BF(phi) = sum_m x_m exp(-j*2*pi*d1*m*cos(phi))
is the DTFT of the snapshot evaluated at omega = 2*pi*d1*cos(phi). The N-point
DFT of the zero-padded snapshot is therefore sampled through the nonlinear
map k = int(N*d1*cos(phi)), bins taken as signed integers and wrapped modulo
N. SVA runs on the full N-bin spectrum with K = N/M before that mapping,
since its +-K neighbours are defined in bin space.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ConstraintViolation, SizeError
from .models import Method, MethodKind
from .spectral import dft, padding_factor, raised_cosine_weights
from .sva import DEFAULT_DENOM_EPSILON, SvaMode, SvaOptions, apply_sva

logger = logging.getLogger(__name__)

DEFAULT_DFT_SIZE = 1024
DEFAULT_ANGLE_STEP_DEG = 0.1

# Floor for 20*log10 of zero responses
MIN_LEVEL_DB = -300.0


def round_half_away(value):
    value = np.asarray(value, dtype=float)
    return (np.sign(value) * np.floor(np.abs(value) + 0.5)).astype(int)


def _check_angles(angles):
    angles = np.asarray(angles, dtype=float)
    if angles.ndim != 1 or angles.size < 1:
        raise SizeError("angle grid must be a non-empty 1-D sequence")
    if np.any(angles < 0.0) or np.any(angles > 180.0):
        raise ConstraintViolation("angles must lie in [0, 180] degrees")
    if angles.size > 1 and np.any(np.diff(angles) <= 0):
        raise ConstraintViolation("angle grid must be strictly increasing")
    return angles


@dataclass(frozen=True)
class BinAngleMap:
    dft_size: int
    spacing_ratio: float

    def __post_init__(self):
        if self.dft_size < 1:
            raise SizeError(f"dft_size must be positive, got {self.dft_size}")
        if not self.spacing_ratio > 0:
            raise ConstraintViolation(f"spacing ratio must be > 0, got {self.spacing_ratio}")

    @property
    def visible_limit(self):
        """Largest |k| that maps to a physical angle."""
        return self.spacing_ratio * self.dft_size

    def forward(self, angles_deg):
        """Signed bins int(N*d1*cos(phi)), rounding half away from zero."""
        angles = np.asarray(angles_deg, dtype=float)
        if np.any(angles < 0.0) or np.any(angles > 180.0):
            raise ConstraintViolation("angles must lie in [0, 180] degrees")
        return round_half_away(self.dft_size * self.spacing_ratio * np.cos(np.deg2rad(angles)))

    def inverse(self, bins):
        bins = np.asarray(bins, dtype=float)
        if np.any(np.abs(bins) > self.visible_limit):
            raise ConstraintViolation(
                f"bin outside the visible region |k| <= {self.visible_limit:g}")
        return np.rad2deg(np.arccos(bins / self.visible_limit))

    def index(self, bins):
        return np.mod(bins, self.dft_size)


def angle_to_bin(angle_deg, bin_map):
    return int(bin_map.forward(angle_deg))


def bin_to_angle(k, bin_map):
    return float(bin_map.inverse(k))


def angle_grid(step_deg=DEFAULT_ANGLE_STEP_DEG):
    """0 to 180 degrees inclusive in ``step_deg`` steps."""
    if not 0 < step_deg <= 180:
        raise ConstraintViolation(f"angle step must be in (0, 180], got {step_deg}")
    n = int(np.floor(180.0 / step_deg + 1e-9))
    angles = np.arange(n + 1) * step_deg
    if angles[-1] < 180.0 - 1e-9:
        angles = np.append(angles, 180.0)
    return np.minimum(angles, 180.0)


@dataclass(frozen=True, eq=False)
class Beampattern:
    angles_deg: np.ndarray
    response: np.ndarray
    method: Method
    alpha_trace: Optional[np.ndarray] = None
    power_db: np.ndarray = field(init=False)

    def __post_init__(self):
        magnitude = np.abs(self.response)
        peak = magnitude.max()
        if peak > 0:
            ratio = np.maximum(magnitude / peak, 10.0 ** (MIN_LEVEL_DB / 20.0))
            power = 20.0 * np.log10(ratio)
        else:
            power = np.zeros_like(magnitude)
        object.__setattr__(self, 'power_db', power)

    def __len__(self):
        return self.angles_deg.size

    @property
    def level_db_abs(self):
        """Unnormalized 20*log10|response|."""
        magnitude = np.maximum(np.abs(self.response), 10.0 ** (MIN_LEVEL_DB / 20.0))
        return 20.0 * np.log10(magnitude)

    def index_of(self, angle_deg):
        return int(np.argmin(np.abs(self.angles_deg - angle_deg)))

    @property
    def peak_angle(self):
        return float(self.angles_deg[np.argmax(np.abs(self.response))])


def _check_snapshot(snapshot, geometry):
    x = np.asarray(snapshot, dtype=complex).ravel()
    if x.size != geometry.sensor_count:
        raise SizeError(f"snapshot has {x.size} samples, array has {geometry.sensor_count} sensors")
    if geometry.spacing_ratio > 0.5:
        logger.warning("spacing ratio d1=%g > 1/2: grating lobes alias into the pattern",
                       geometry.spacing_ratio)
    return x


def _sample(values, geometry, angles, dft_size):
    bin_map = BinAngleMap(dft_size, geometry.spacing_ratio)
    return np.asarray(values)[bin_map.index(bin_map.forward(angles))]


def steered_response(snapshot, geometry, angles, weights=None):
    """Direct evaluation of sum_m w_m x_m exp(-j*2*pi*d1*m*cos(phi)) at every angle."""
    x = _check_snapshot(snapshot, geometry)
    angles = _check_angles(angles)
    if weights is not None:
        x = x * np.asarray(weights)
    m = np.arange(geometry.sensor_count)
    phase = -2j * np.pi * geometry.spacing_ratio * np.outer(np.cos(np.deg2rad(angles)), m)
    return np.exp(phase) @ x


def conventional_beampattern(snapshot, geometry, angles=None, dft_size=DEFAULT_DFT_SIZE):
    x = _check_snapshot(snapshot, geometry)
    angles = _check_angles(angle_grid() if angles is None else angles)
    spectrum = dft(x, dft_size)
    return Beampattern(angles, _sample(spectrum.bins, geometry, angles, dft_size), Method(MethodKind.RECT))


def _shading_method(alpha):
    if alpha == 0.0:
        return Method(MethodKind.RECT)
    if alpha == 0.5:
        return Method(MethodKind.HANNING)
    return Method(MethodKind.RAISED_COSINE, float(alpha))


def shaded_beampattern(snapshot, geometry, angles=None, alpha=0.5, dft_size=DEFAULT_DFT_SIZE):
    """Conventional beampattern of the snapshot shaded by a length-M raised-cosine window."""
    x = _check_snapshot(snapshot, geometry)
    weights = raised_cosine_weights(alpha, geometry.sensor_count)
    pattern = conventional_beampattern(x * weights, geometry, angles, dft_size)
    return Beampattern(pattern.angles_deg, pattern.response, _shading_method(alpha))


def sva_options_for(geometry, dft_size=DEFAULT_DFT_SIZE, mode=SvaMode.JOINTLY,
                    denom_epsilon=DEFAULT_DENOM_EPSILON):
    k = padding_factor(dft_size, geometry.sensor_count)
    return SvaOptions(mode, dft_size, k, denom_epsilon)


def sva_beampattern(snapshot, geometry, angles=None, opts=None):
    x = _check_snapshot(snapshot, geometry)
    angles = _check_angles(angle_grid() if angles is None else angles)
    if opts is None:
        opts = sva_options_for(geometry)
    k = padding_factor(opts.dft_size, geometry.sensor_count)
    if opts.padding_factor != k:
        raise SizeError(f"padding factor {opts.padding_factor} != N/M = {k}")

    result = apply_sva(dft(x, opts.dft_size), opts)
    kind = MethodKind.SVA_SEPARATELY if opts.mode is SvaMode.SEPARATELY else MethodKind.SVA_JOINTLY
    return Beampattern(
        angles,
        _sample(result.output.bins, geometry, angles, opts.dft_size),
        Method(kind),
        alpha_trace=_sample(result.alphas, geometry, angles, opts.dft_size),
    )


def beampattern(snapshot, geometry, method, angles=None, dft_size=DEFAULT_DFT_SIZE,
                denom_epsilon=DEFAULT_DENOM_EPSILON):
    """Beampattern for any `Method`."""
    if method.kind is MethodKind.RECT:
        return conventional_beampattern(snapshot, geometry, angles, dft_size)
    if method.kind is MethodKind.HANNING:
        return shaded_beampattern(snapshot, geometry, angles, 0.5, dft_size)
    if method.kind is MethodKind.RAISED_COSINE:
        return shaded_beampattern(snapshot, geometry, angles, method.alpha, dft_size)
    mode = SvaMode.SEPARATELY if method.kind is MethodKind.SVA_SEPARATELY else SvaMode.JOINTLY
    opts = sva_options_for(geometry, dft_size, mode, denom_epsilon)
    return sva_beampattern(snapshot, geometry, angles, opts)
