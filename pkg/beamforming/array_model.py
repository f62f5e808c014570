"""
Narrowband ULA snapshot synthesis.

A snapshot is the vector of complex sensor amplitudes at the carrier
frequency, x_m for m = 0..M-1, with sensor 0 as the phase reference. The
conventional beamformer weights sensor m by exp(-j*2*pi*d1*m*cos(phi)), so a
plane wave from phi_s is synthesized with the conjugate phase progression
and sums coherently when the beamformer is steered to phi_s.
"""

import logging

import numpy as np

from .errors import ConstraintViolation

logger = logging.getLogger(__name__)


def _check_azimuth(azimuth_deg):
    if not 0.0 <= azimuth_deg <= 180.0:
        raise ConstraintViolation(f"azimuth {azimuth_deg} deg outside [0, 180]")


def steering_phase(geometry, azimuth_deg, m):
    """Beamformer phase of sensor ``m`` for look direction ``azimuth_deg``, in radians."""
    if not 0 <= m < geometry.sensor_count:
        raise ConstraintViolation(f"sensor index {m} outside [0, {geometry.sensor_count})")
    _check_azimuth(azimuth_deg)
    return -2.0 * np.pi * geometry.spacing_ratio * m * np.cos(np.deg2rad(azimuth_deg))


def steering_vector(geometry, azimuth_deg):
    _check_azimuth(azimuth_deg)
    m = np.arange(geometry.sensor_count)
    return np.exp(-2j * np.pi * geometry.spacing_ratio * m * np.cos(np.deg2rad(azimuth_deg)))


def amplitude(power_db):
    return 10.0 ** (power_db / 20.0)


def noise_variance(scenario):
    """Per-sensor noise power for the scenario SNR, relative to the strongest source."""
    if scenario.noiseless:
        return 0.0
    a_max = max(amplitude(s.power_db) for s in scenario.sources)
    return a_max ** 2 * 10.0 ** (-scenario.snr_db / 10.0)


def _streams(seed):
    noise_seq, phase_seq = np.random.SeedSequence(seed).spawn(2)
    return np.random.default_rng(noise_seq), np.random.default_rng(phase_seq)


def synthesize_noise(scenario):
    """Circularly-symmetric complex Gaussian noise, identical for any source list with the same seed."""
    m = scenario.geometry.sensor_count
    sigma2 = noise_variance(scenario)
    if sigma2 == 0.0:
        return np.zeros(m, dtype=complex)
    rng, _ = _streams(scenario.seed)
    draws = rng.standard_normal((2, m))
    return np.sqrt(sigma2 / 2.0) * (draws[0] + 1j * draws[1])


def source_phases(scenario):
    if not scenario.random_phases:
        return np.array([s.phase_rad for s in scenario.sources])
    _, rng = _streams(scenario.seed)
    offsets = rng.uniform(0.0, 2.0 * np.pi, len(scenario.sources))
    return np.array([s.phase_rad for s in scenario.sources]) + offsets


def synthesize_snapshot(scenario):
    geometry = scenario.geometry
    x = np.zeros(geometry.sensor_count, dtype=complex)
    for source, phase in zip(scenario.sources, source_phases(scenario)):
        a = amplitude(source.power_db) * np.exp(1j * phase)
        x += a * np.conj(steering_vector(geometry, source.azimuth_deg))
    x += synthesize_noise(scenario)
    logger.debug("synthesized %d-sensor snapshot from %d sources, SNR %s dB",
                 geometry.sensor_count, len(scenario.sources), scenario.snr_db)
    return x
