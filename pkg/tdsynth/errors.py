"""Exception hierarchy for tdsynth."""

from typing import Optional


class SynthesisError(Exception):
    """Base exception for all tdsynth errors."""


class ShapeError(SynthesisError):
    """Structural mismatch: non-square input, wrong row length, dimension mismatch."""


class NotOrthogonalError(SynthesisError):
    """Matrix failed the exact check U^T U = I."""


class ParityError(SynthesisError):
    """sqrt(2)-exponent parity is incompatible with the requested ring or dimension."""


class InvalidGeneratorError(SynthesisError):
    """Generator level indices out of range or out of order, or IH at odd dimension."""


class ParseError(SynthesisError):
    """A word, circuit or matrix file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnsupportedDimensionError(SynthesisError):
    """The requested algorithm is not defined at this dimension."""

    def __init__(self, message: str, n: Optional[int] = None):
        super().__init__(message)
        self.n = n


class PatternMatchError(SynthesisError):
    """Binary pattern matched none of the stored tables."""


class ReductionError(SynthesisError):
    """A reduction step broke its contract (lde did not drop, no pairing, runaway loop)."""


class RewriteError(SynthesisError):
    """I⊗H elimination precondition violated."""


class VerificationError(SynthesisError):
    """Exact re-verification of a synthesized result failed."""
