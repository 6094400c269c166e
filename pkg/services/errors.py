"""
Error types raised by the flagrep services.

Every error carries a stable ``code`` used by the CLI diagnostics.
"""
from typing import Optional


class FlagrepError(Exception):
    """Base class for all domain errors."""

    code: str = "flagrep-error"

    def diagnostic(self) -> str:
        """One-line diagnostic string for the error stream."""
        return f"error: {self.code}: {self}"


class InvalidCartanMatrix(FlagrepError):
    code = "invalid-cartan-matrix"


class NotFiniteType(FlagrepError):
    code = "not-finite-type"


class DimensionMismatch(FlagrepError):
    code = "dimension-mismatch"


class IndexOutOfRange(FlagrepError):
    code = "index-out-of-range"


class NonTermination(FlagrepError):
    code = "non-termination"


class SingularWeight(FlagrepError):
    code = "singular-weight"


class NotDominant(FlagrepError):
    code = "not-dominant"


class NonIntegerWeight(FlagrepError):
    code = "non-integer-weight"


class NonIntegerResult(FlagrepError):
    """An exact product that must be integral was not; signals an internal bug."""

    code = "non-integer-result"


class ResourceLimit(FlagrepError):
    code = "resource-limit"


class SerreDualityViolation(FlagrepError):
    code = "serre-duality-violation"


class InvalidPoint(FlagrepError):
    code = "invalid-point"


class SampleFailure(FlagrepError):
    """A Matsuki duality sample failed; ``point`` holds the offending sample."""

    code = "sample-failure"

    def __init__(self, message: str, point: Optional[object] = None):
        super().__init__(message)
        self.point = point


class InconsistentResult(FlagrepError):
    """Two independent computations disagreed; signals an internal bug."""

    code = "inconsistent-result"
