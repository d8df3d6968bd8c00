"""Exception types shared across the package."""


class BrextError(Exception):
    """Base class for all package errors."""


class OrderTooLarge(BrextError):
    """Group order exceeds the exhaustive-validation cap."""


class MalformedTable(BrextError):
    """Cayley table dimensions or entries are structurally broken."""


class MalformedMap(BrextError):
    """Homomorphism map has the wrong length or out-of-range entries."""


class IndexOutOfRange(BrextError, IndexError):
    """Element index outside a group's carrier."""


class MissingBond(BrextError):
    """No bonding homomorphism recorded for a requested pair of levels."""


class NotIdempotent(BrextError):
    """Operand of an idempotent-only comparison is not an idempotent."""


class ZeroNotAdjoined(BrextError):
    """Zero element used in a system built without an adjoined zero."""


class WindowTooLarge(BrextError):
    """Exhaustive scan requested over a window larger than the cap."""


class WitnessVerificationFailed(BrextError):
    """Internal guard: a constructed witness failed re-verification."""


class MalformedDescriptor(BrextError):
    """Zero-neighborhood descriptor of unknown kind."""


class ParseError(BrextError):
    """Unreadable config file or element literal."""


class ValidationFailed(BrextError):
    """A loaded system failed structural validation.

    Carries the full report so callers can surface every violation.
    """

    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else "unknown"
        more = len(report.violations) - 1
        msg = first if more <= 0 else f"{first} (+{more} more)"
        super().__init__(msg)
