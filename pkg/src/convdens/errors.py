"""Exception hierarchy shared by the library and the CLI.

The CLI maps these onto exit codes: spec/shape problems exit 2,
hypothesis violations exit 3, complexity caps exit 4.
"""


class ConvdensError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(ConvdensError):
    """Tables with mismatched limits or value modes were combined."""


class SpecError(ConvdensError):
    """A specification object or spec file is malformed."""


class RangeError(ConvdensError):
    """A checkpoint or evaluation limit exceeds the available data."""


class ComplexityError(ConvdensError):
    """A computation would exceed a configured size cap."""


class RuleError(ConvdensError):
    """A prime-power rule failed or is not covered at some (p, k)."""

    def __init__(self, message: str, p: int | None = None, k: int | None = None):
        super().__init__(message)
        self.p = p
        self.k = k


class HypothesisError(ConvdensError):
    """An operation's mathematical hypothesis is violated or undeclared."""


class NotInvertible(HypothesisError):
    """Dirichlet inversion requires a value at 1 that is nonzero."""


class NotMultiplicative(HypothesisError):
    """The operation requires a multiplicative, rule-backed function."""


class UnboundedFunction(HypothesisError):
    """The operation requires a function declared bounded."""


class UnknownTail(HypothesisError):
    """The operation requires an explicit tail declaration."""


class DegenerateConstant(HypothesisError):
    """The declared prime tail diverges, so the constant degenerates to 0."""
