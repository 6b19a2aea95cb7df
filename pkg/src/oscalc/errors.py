"""Exception types shared across the package."""


class OscalcError(Exception):
    """Base class for all package errors."""


class NotSimpleError(OscalcError):
    """The input has a loop or a multiple point (parallel pair)."""


class AxiomError(OscalcError):
    """A presentation violates the matroid axioms; the message names the offenders."""


class GuardError(OscalcError):
    """An enumeration was refused because the ground set exceeds the size guard."""


class ParseError(OscalcError):
    """A text input could not be parsed; carries a 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CatalogError(OscalcError):
    """Unknown catalog entry name."""


class SectionError(OscalcError):
    """A pseudo-random section failed its genericity certificate."""


class InternalCheckError(OscalcError):
    """A built-in cross-identity failed; indicates a bug in the math core."""
