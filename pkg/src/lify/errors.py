"""Errors shared across service boundaries.

Module-specific failures (sensor faults, MQTT errors, ...) live next to the
code that raises them; the classes here are the ones the HTTP layer maps to
status codes and that more than one subsystem raises.
"""


class LifyError(Exception):
    """Base class for all domain errors."""

    code = "error"


class ValidationError(LifyError):
    code = "validation"


class Forbidden(LifyError):
    code = "forbidden"


class NotFound(LifyError):
    code = "not_found"
