"""Domain types shared by every part of the platform.

The three monitored metrics and their quality flags form the wire contract:
the string codes defined here appear verbatim in MQTT payloads, storage
segments, and API responses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Sequence

from ..errors import LifyError


class MetricKind(str, Enum):
    """The monitored vitals. The string values are stable wire identifiers."""

    TEMP_C = "temp_c"
    HR_BPM = "hr_bpm"
    SPO2_PCT = "spo2_pct"

    @property
    def unit(self) -> str:
        return {_U.TEMP_C: "°C", _U.HR_BPM: "BPM", _U.SPO2_PCT: "%"}[self]

    @property
    def label(self) -> str:
        return {
            _U.TEMP_C: "temperature",
            _U.HR_BPM: "heart rate",
            _U.SPO2_PCT: "SpO₂",
        }[self]


_U = MetricKind  # local alias for the property tables above


class Quality(str, Enum):
    """Per-value trust marker, propagated end to end.

    Ordered: OK < SUSPECT < NO_SIGNAL. A quality flag is only ever
    downgraded as a value moves through the pipeline, never upgraded.
    """

    OK = "ok"
    SUSPECT = "suspect"
    NO_SIGNAL = "no_signal"

    @property
    def rank(self) -> int:
        return {Quality.OK: 0, Quality.SUSPECT: 1, Quality.NO_SIGNAL: 2}[self]


def worst_quality(qualities) -> Quality:
    """The least trustworthy flag of a non-empty collection."""
    return max(qualities, key=lambda q: q.rank)


# Plausible physiological bounds per metric; values outside are flagged
# SUSPECT by validate_sample (units: degC, BPM, percent).
PHYSIOLOGICAL_BOUNDS: dict[MetricKind, tuple[float, float]] = {
    MetricKind.TEMP_C: (25.0, 45.0),
    MetricKind.HR_BPM: (20.0, 250.0),
    MetricKind.SPO2_PCT: (70.0, 100.0),
}


@dataclass(frozen=True)
class VitalSample:
    """One timestamped reading of one metric for one patient."""

    patient_id: str
    device_id: str
    metric: MetricKind
    value: float
    ts_ms: int
    quality: Quality = Quality.OK

    def with_quality(self, quality: Quality) -> "VitalSample":
        return replace(self, quality=quality)


class WindowTooShort(LifyError):
    code = "window_too_short"


@dataclass(frozen=True)
class PpgWindow:
    """A dual-channel window of raw optical samples (dimensionless ADC counts).

    Red and IR channels must be the same length and cover at least two
    seconds of signal; sample rates outside [25, 1000] Hz are rejected.
    """

    red: Sequence[float]
    ir: Sequence[float]
    sample_rate_hz: float

    def check(self) -> None:
        """Raise WindowTooShort unless the window invariants hold."""
        if not 25.0 <= self.sample_rate_hz <= 1000.0:
            raise WindowTooShort(
                f"sample rate {self.sample_rate_hz} Hz outside [25, 1000]"
            )
        n = len(self.red)
        if len(self.ir) != n:
            raise WindowTooShort("red and ir channels differ in length")
        if n < 2 * self.sample_rate_hz:
            raise WindowTooShort(
                f"{n} samples is less than 2 s at {self.sample_rate_hz} Hz"
            )


class SensorFault(LifyError):
    code = "sensor_fault"


# High bit of the 16-bit temperature register flags a sensor-side error.
TEMP_RAW_ERROR_BIT = 0x8000
TEMP_RAW_MAX_VALID = 0x7FFF


@dataclass(frozen=True)
class RawTempReading:
    """Raw 16-bit register value from the infrared thermometer, 0.02 K/count."""

    raw: int

    def check(self) -> None:
        if self.raw < 0 or self.raw > TEMP_RAW_MAX_VALID:
            raise SensorFault(f"raw register value 0x{self.raw:04X} has error flag set")


def is_finite(value: float) -> bool:
    return isinstance(value, (int, float)) and math.isfinite(value)
