"""Internal-consistency faults.

These exceptions signal implementation bugs or violated theorems, never bad
user input. The CLI maps them to a dedicated exit code so scripts can tell
"the answer is no" apart from "the tool is broken".
"""


class InternalFaultError(Exception):
    """Base class for faults that indicate a bug, not an expected outcome."""


class InconsistentRoutesError(InternalFaultError):
    """The direct and cyclotomic tiling checks disagreed on the same input."""


class WitnessViolationError(InternalFaultError):
    """No cyclotomic witness exists for a top prime power of a least period."""


class InvalidShiftError(InternalFaultError):
    """A column shift produced coefficients outside {0, 1}."""
