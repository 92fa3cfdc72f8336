"""Sample-to-vitals math for the two bedside sensors.

Temperature is a linear register conversion. Heart rate comes from peak
detection on the detrended IR channel; SpO2 uses the ratio-of-ratios of the
two optical channels against the empirical line 110 - 25*R. Both PPG
estimators detrend with the same 1 s moving average so per-channel gain
cancels out of the ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.ndimage import uniform_filter1d
from scipy.signal import find_peaks

from ..errors import LifyError
from .types import (
    PHYSIOLOGICAL_BOUNDS,
    PpgWindow,
    Quality,
    RawTempReading,
    VitalSample,
    is_finite,
)

TEMP_KELVIN_PER_COUNT = 0.02
KELVIN_OFFSET = 273.15

# Detrending window (seconds) shared by both PPG estimators.
DETREND_WINDOW_S = 1.0
# Peaks closer than this are one beat; caps detectable HR near 180 BPM.
MIN_PEAK_SPACING_S = 0.33
# Local maxima must clear this fraction of the detrended RMS.
PEAK_THRESHOLD_RMS_FRACTION = 0.5
MIN_PEAKS = 3

# Empirical calibration line for ratio-of-ratios.
SPO2_INTERCEPT = 110.0
SPO2_SLOPE = -25.0
SPO2_MIN, SPO2_MAX = 70.0, 100.0


class NoPulseDetected(LifyError):
    code = "no_pulse"


class NoSignalError(LifyError):
    code = "no_signal"


def raw_to_celsius(reading: RawTempReading) -> float:
    """Convert a raw thermometer register value to degrees Celsius.

    The register counts 0.02 K per LSB from absolute zero; readings with
    the error flag bit set raise SensorFault.
    """
    reading.check()
    return reading.raw * TEMP_KELVIN_PER_COUNT - KELVIN_OFFSET


def _detrend(channel: np.ndarray, sample_rate_hz: float) -> np.ndarray:
    window = max(1, int(round(DETREND_WINDOW_S * sample_rate_hz)))
    return channel - uniform_filter1d(channel, size=window, mode="nearest")


def estimate_heart_rate(window: PpgWindow) -> float:
    """Estimate heart rate in BPM from the IR channel of a PPG window.

    Detrends with a 1 s moving average, finds local maxima above half the
    detrended RMS with a 0.33 s refractory spacing, and converts the span
    of the detected beats to a rate. Needs at least three peaks.
    """
    window.check()
    ir = np.asarray(window.ir, dtype=float)
    detrended = _detrend(ir, window.sample_rate_hz)
    rms = float(np.sqrt(np.mean(detrended**2)))
    if rms <= 0.0 or not math.isfinite(rms):
        raise NoPulseDetected("no oscillation in IR channel")

    spacing = max(1, int(math.ceil(MIN_PEAK_SPACING_S * window.sample_rate_hz)))
    peaks, _ = find_peaks(
        detrended, height=PEAK_THRESHOLD_RMS_FRACTION * rms, distance=spacing
    )
    if len(peaks) < MIN_PEAKS:
        raise NoPulseDetected(f"only {len(peaks)} peaks found, need {MIN_PEAKS}")

    span_s = (peaks[-1] - peaks[0]) / window.sample_rate_hz
    return 60.0 * (len(peaks) - 1) / span_s


@dataclass(frozen=True)
class Spo2Estimate:
    """SpO2 percentage plus whether the calibration clamp engaged.

    A clamped estimate means the measured ratio fell outside the part of
    the curve the calibration line covers; callers should carry the value
    with SUSPECT quality.
    """

    spo2_pct: float
    clamped: bool

    @property
    def quality(self) -> Quality:
        return Quality.SUSPECT if self.clamped else Quality.OK


def estimate_spo2(window: PpgWindow) -> Spo2Estimate:
    """Estimate SpO2 via ratio-of-ratios of the red and IR channels.

    AC is the peak-to-peak of each detrended channel and DC its raw mean;
    R = (AC_red/DC_red) / (AC_ir/DC_ir) maps through 110 - 25*R, clamped
    to [70, 100].
    """
    window.check()
    red = np.asarray(window.red, dtype=float)
    ir = np.asarray(window.ir, dtype=float)

    dc_red = float(np.mean(red))
    dc_ir = float(np.mean(ir))
    if dc_red <= 0.0 or dc_ir <= 0.0:
        raise NoSignalError("non-positive DC level")

    ac_red = float(np.ptp(_detrend(red, window.sample_rate_hz)))
    ac_ir = float(np.ptp(_detrend(ir, window.sample_rate_hz)))
    if ac_ir == 0.0:
        raise NoSignalError("flat IR channel")

    ratio = (ac_red / dc_red) / (ac_ir / dc_ir)
    raw = SPO2_INTERCEPT + SPO2_SLOPE * ratio
    clamped = not (SPO2_MIN <= raw <= SPO2_MAX)
    return Spo2Estimate(min(max(raw, SPO2_MIN), SPO2_MAX), clamped)


def validate_sample(sample: VitalSample) -> VitalSample:
    """Downgrade a sample's quality if its value is implausible.

    Non-finite values become NO_SIGNAL, values outside the physiological
    bounds become SUSPECT; quality is never upgraded. Total and idempotent.
    """
    if not is_finite(sample.value):
        computed = Quality.NO_SIGNAL
    else:
        lo, hi = PHYSIOLOGICAL_BOUNDS[sample.metric]
        computed = Quality.OK if lo <= sample.value <= hi else Quality.SUSPECT
    if computed.rank > sample.quality.rank:
        return sample.with_quality(computed)
    return sample
