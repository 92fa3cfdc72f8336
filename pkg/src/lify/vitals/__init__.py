"""Shared domain types and sensor signal processing."""

from .processing import (
    NoPulseDetected,
    NoSignalError,
    Spo2Estimate,
    estimate_heart_rate,
    estimate_spo2,
    raw_to_celsius,
    validate_sample,
)
from .types import (
    PHYSIOLOGICAL_BOUNDS,
    MetricKind,
    PpgWindow,
    Quality,
    RawTempReading,
    SensorFault,
    VitalSample,
    WindowTooShort,
    worst_quality,
)

__all__ = [
    "PHYSIOLOGICAL_BOUNDS",
    "MetricKind",
    "NoPulseDetected",
    "NoSignalError",
    "PpgWindow",
    "Quality",
    "RawTempReading",
    "SensorFault",
    "Spo2Estimate",
    "VitalSample",
    "WindowTooShort",
    "estimate_heart_rate",
    "estimate_spo2",
    "raw_to_celsius",
    "validate_sample",
    "worst_quality",
]
