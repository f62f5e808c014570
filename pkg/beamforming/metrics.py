"""
Beampattern measurements: peaks, -3 dB mainlobe width, sidelobe level,
two-source resolvability and weak-target detection.

Levels are the pattern's max-normalized ``power_db`` unless a function says
it works on unnormalized levels (``level_db_abs``), which is what peak-loss
and noise-floor comparisons between two patterns need.
"""

import logging
import math
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import signal

from .errors import MetricsError

logger = logging.getLogger(__name__)

HALF_POWER_DB = 3.0
DETECTION_MARGIN_DB = 3.0


@dataclass
class PatternMetrics:
    peaks: list = field(default_factory=list)
    mainlobe_width_deg: float = math.nan
    peak_sidelobe_db: float = math.nan
    noise_floor_db: float = math.nan

    def as_dict(self):
        data = asdict(self)
        data['peak_count'] = len(self.peaks)
        data['peaks'] = ';'.join(f"{a:.1f}@{lvl:.2f}" for a, lvl in self.peaks)
        return data


def _local_maxima(pattern, prominence=None):
    # guard samples below the pattern let a maximum on the first or last grid angle count
    levels = pattern.power_db
    guard = levels.min() - 1.0
    indices, _ = signal.find_peaks(np.concatenate(([guard], levels, [guard])), prominence=prominence)
    return indices - 1


def find_peaks(pattern, min_prominence_db=3.0):
    """Local maxima with at least ``min_prominence_db`` prominence, highest first."""
    indices = _local_maxima(pattern, prominence=min_prominence_db)
    peaks = [(float(pattern.angles_deg[i]), float(pattern.power_db[i])) for i in indices]
    return sorted(peaks, key=lambda p: p[1], reverse=True)


def _crossing(angles, levels, i, j, threshold):
    """Angle where the level crosses ``threshold`` between grid points i and j."""
    a0, a1 = angles[i], angles[j]
    l0, l1 = levels[i], levels[j]
    if l1 == l0:
        return a0
    return a0 + (threshold - l0) * (a1 - a0) / (l1 - l0)


def mainlobe_width(pattern, peak_angle):
    """Width in degrees between the -3 dB crossings around ``peak_angle``."""
    levels = pattern.power_db
    angles = pattern.angles_deg
    peak = pattern.index_of(peak_angle)
    threshold = levels[peak] - HALF_POWER_DB

    left = peak
    while left > 0 and levels[left] >= threshold:
        left -= 1
    right = peak
    while right < levels.size - 1 and levels[right] >= threshold:
        right += 1
    if levels[left] >= threshold or levels[right] >= threshold:
        raise MetricsError(f"-3 dB crossings of the peak at {peak_angle} deg not found in [0, 180]")

    lo = _crossing(angles, levels, left, left + 1, threshold)
    hi = _crossing(angles, levels, right - 1, right, threshold)
    return float(hi - lo)


def mainlobe_span(pattern, peak_angle):
    """Grid indices of the first nulls (level minima) flanking ``peak_angle``."""
    levels = pattern.power_db
    left = right = pattern.index_of(peak_angle)
    while left > 0 and levels[left - 1] <= levels[left]:
        left -= 1
    while right < levels.size - 1 and levels[right + 1] <= levels[right]:
        right += 1
    return left, right


def _outside_mask(pattern, peak_angles):
    mask = np.ones(len(pattern), dtype=bool)
    for angle in peak_angles:
        lo, hi = mainlobe_span(pattern, angle)
        mask[lo:hi + 1] = False
    return mask


def _declared_peaks(pattern, declared_angles, min_prominence_db):
    peaks = find_peaks(pattern, min_prominence_db)
    if not declared_angles:
        if peaks:
            return [peaks[0][0]]
        return [pattern.peak_angle]
    chosen = []
    for angle in declared_angles:
        near = [p for p in peaks if abs(p[0] - angle) <= 1.0]
        chosen.append(max(near, key=lambda p: p[1])[0] if near else angle)
    return chosen


def compute_metrics(pattern, declared_angles=None, min_prominence_db=3.0):
    peaks = find_peaks(pattern, min_prominence_db)
    mains = _declared_peaks(pattern, declared_angles, min_prominence_db)
    strongest = max(mains, key=lambda a: pattern.power_db[pattern.index_of(a)])

    try:
        width = mainlobe_width(pattern, strongest)
    except MetricsError as exc:
        logger.warning("%s: %s", pattern.method, exc)
        width = math.nan

    outside = pattern.power_db[_outside_mask(pattern, mains)]
    if outside.size:
        sidelobe, floor = float(outside.max()), float(np.median(outside))
    else:
        sidelobe = floor = math.nan
    return PatternMetrics(peaks, width, sidelobe, floor)


def _best_peak_near(pattern, candidates, angle, tolerance):
    near = [i for i in candidates if abs(pattern.angles_deg[i] - angle) <= tolerance]
    if not near:
        return None
    return max(near, key=lambda i: pattern.power_db[i])


def resolvability(pattern, angle_a, angle_b, min_dip_db=3.0):
    """True when both sources show their own peak and the dip between them is deep enough."""
    tolerance = 0.5 * abs(angle_a - angle_b)
    maxima = _local_maxima(pattern)
    pa = _best_peak_near(pattern, maxima, angle_a, tolerance)
    pb = _best_peak_near(pattern, maxima, angle_b, tolerance)
    if pa is None or pb is None or pa == pb:
        return False
    lo, hi = sorted((pa, pb))
    dip = pattern.power_db[lo:hi + 1].min()
    lower_peak = min(pattern.power_db[pa], pattern.power_db[pb])
    return bool(lower_peak - dip >= min_dip_db)


def _lobe_end(levels, maxima, peak, step):
    """
    Valley where the lobe around ``peak`` ends when walking in direction ``step``.

    The walk passes over shallow dips as long as each following local maximum
    is lower than the previous one, and stops before the first one that rises.
    """
    ahead = maxima[maxima > peak] if step > 0 else maxima[maxima < peak][::-1]
    top, last = levels[peak], peak
    for m in ahead:
        if levels[m] >= top:
            lo, hi = sorted((last, m))
            return lo + int(np.argmin(levels[lo:hi + 1]))
        top, last = levels[m], m
    return levels.size - 1 if step > 0 else 0


def detects_target(pattern, angle, max_level_db=0.0, window_deg=1.0):
    """
    True when the highest local peak within ``window_deg`` of ``angle`` (and no
    higher than ``max_level_db``) stands at least 3 dB above everything else
    within ``4 * window_deg``, its own lobe excluded.
    """
    levels = pattern.power_db
    offset = np.abs(pattern.angles_deg - angle)
    maxima = _local_maxima(pattern)
    candidates = [i for i in maxima if offset[i] <= window_deg and levels[i] <= max_level_db]
    if not candidates:
        return False
    peak = max(candidates, key=lambda i: levels[i])

    field = offset <= 4.0 * window_deg
    field[_lobe_end(levels, maxima, peak, -1):_lobe_end(levels, maxima, peak, 1) + 1] = False
    if not field.any():
        return True
    return bool(levels[peak] - levels[field].max() >= DETECTION_MARGIN_DB)


def peak_level_db(pattern, angle, half_window_deg):
    """Highest unnormalized level within ``half_window_deg`` of ``angle``."""
    near = np.abs(pattern.angles_deg - angle) <= half_window_deg
    if not near.any():
        raise MetricsError(f"no grid angle within {half_window_deg} deg of {angle}")
    return float(pattern.level_db_abs[near].max())


def peak_loss_db(reference, candidate, angle, half_window_deg):
    """How far the candidate's peak near ``angle`` sits below the reference's, in dB."""
    return peak_level_db(reference, angle, half_window_deg) - peak_level_db(candidate, angle, half_window_deg)


def floor_level_db(pattern, exclude_angles=()):
    """Median unnormalized level outside the mainlobes around ``exclude_angles``."""
    return float(np.median(pattern.level_db_abs[_outside_mask(pattern, exclude_angles)]))
