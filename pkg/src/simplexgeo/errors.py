"""Exception types shared across the package."""


class SimplexError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(SimplexError):
    """Points with incompatible coordinate dimensions were mixed."""


class InvalidPoint(SimplexError):
    """A coordinate is non-finite or a point is empty."""


class TooFewPoints(SimplexError):
    """Not enough points to form the requested object."""


class Degenerate(SimplexError):
    """The vertex set is affinely dependent under the rank tolerance."""


class IndexOutOfRange(SimplexError):
    """A vertex index is outside 0..m."""


class InvalidDimension(SimplexError):
    """A dimension argument is out of the supported range."""


class NegativeRadicand(SimplexError):
    """An edge-length radicand is negative beyond rounding tolerance."""


class NotRegular(SimplexError):
    """Operation requires equal edge lengths within tolerance."""


class NotFullDimensional(SimplexError):
    """Operation requires m == n."""


class EmptyInput(SimplexError):
    """An empty point list was supplied."""


class AllDegenerate(SimplexError):
    """Every candidate vertex subset failed the rank test."""


class CapExceeded(SimplexError):
    """Input size exceeds the documented enumeration cap."""


class EvaluationFailure(SimplexError):
    """A system function returned a non-finite value."""


class NoSignCriterion(SimplexError):
    """Neither bisection child satisfies the sign-based selection rule."""


class ParseError(SimplexError):
    """An input file does not conform to the expected JSON schema."""
