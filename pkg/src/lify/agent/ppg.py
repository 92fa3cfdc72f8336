"""Synthetic dual-channel PPG generation.

Stands in for the optical sensor hardware: given target heart rate and
SpO2, produces a window whose beat frequency and ratio-of-ratios recover
those targets exactly (up to noise). The pulse shape is a fundamental plus
a 0.3-amplitude second harmonic, shared by both channels so only the
modulation depths differ.
"""

from __future__ import annotations

import numpy as np

from ..errors import LifyError
from ..vitals.processing import SPO2_INTERCEPT, SPO2_SLOPE
from ..vitals.types import PpgWindow

# Baseline ADC counts per channel; arbitrary, the estimators use ratios.
DC_RED = 40000.0
DC_IR = 50000.0

# IR modulation depth is fixed; red scales with the target ratio.
M_IR = 0.02
HARMONIC_RATIO = 0.3


class InvalidTarget(LifyError):
    code = "invalid_target"


def generate_ppg(
    hr_bpm: float,
    spo2_pct: float,
    sample_rate_hz: float = 100.0,
    duration_s: float = 10.0,
    noise_snr_db: float | None = None,
    seed: int = 0,
) -> PpgWindow:
    """Generate a deterministic synthetic PPG window.

    Each channel is DC * (1 + m * (sin(2*pi*f*t) + 0.3*sin(4*pi*f*t + phi)))
    plus white noise at the requested SNR (relative to the pulsatile
    component; None means noiseless). The red depth is chosen so the
    ratio-of-ratios maps back to spo2_pct through the calibration line.
    """
    if not 20.0 <= hr_bpm <= 250.0:
        raise InvalidTarget(f"hr_bpm {hr_bpm} outside [20, 250]")
    if not 70.0 <= spo2_pct <= 100.0:
        raise InvalidTarget(f"spo2_pct {spo2_pct} outside [70, 100]")

    rng = np.random.default_rng(seed)
    base_phase = rng.uniform(0.0, 2.0 * np.pi)
    harmonic_phase = rng.uniform(0.0, 2.0 * np.pi)

    freq_hz = hr_bpm / 60.0
    ratio = (spo2_pct - SPO2_INTERCEPT) / SPO2_SLOPE
    m_red = ratio * M_IR

    n = int(round(duration_s * sample_rate_hz))
    t = np.arange(n) / sample_rate_hz
    theta = 2.0 * np.pi * freq_hz * t + base_phase
    waveform = np.sin(theta) + HARMONIC_RATIO * np.sin(2.0 * theta + harmonic_phase)

    red = DC_RED * (1.0 + m_red * waveform)
    ir = DC_IR * (1.0 + M_IR * waveform)

    if noise_snr_db is not None and np.isfinite(noise_snr_db):
        scale = 10.0 ** (-noise_snr_db / 20.0)
        ac_rms = float(np.sqrt(np.mean(waveform**2)))
        red = red + rng.normal(0.0, DC_RED * abs(m_red) * ac_rms * scale, n)
        ir = ir + rng.normal(0.0, DC_IR * M_IR * ac_rms * scale, n)

    return PpgWindow(red=red, ir=ir, sample_rate_hz=sample_rate_hz)
