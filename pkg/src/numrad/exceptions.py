"""Exception vocabulary shared by all modules."""


class NumradError(Exception):
    """Base class for every error raised by this package."""


class NonSquare(NumradError):
    """Operation requires a square matrix."""


class NotHermitian(NumradError):
    """Matrix asymmetry exceeds the Hermiticity tolerance."""


class NoConvergence(NumradError):
    """An iterative spectral computation failed to converge."""


class NegativeEigenvalue(NumradError):
    """Matrix expected to be positive semidefinite has a significantly negative eigenvalue."""


class DimensionMismatch(NumradError):
    """Operand shapes are incompatible."""


class InvalidTolerance(NumradError):
    """Tolerance must be strictly positive."""


class NotPositive(NumradError):
    """Argument must be a positive semidefinite Hermitian matrix."""


class NotUnit(NumradError):
    """Vector must have unit norm."""


class NotContraction(NumradError):
    """Product must be a contraction (operator norm at most one)."""


class NotTwoByTwo(NumradError):
    """Partition must consist of exactly 2x2 blocks."""


class InvalidExponent(NumradError):
    """Exponent outside the admissible range."""


class InvalidParameters(NumradError):
    """Scalar or structural parameters violate the stated hypotheses."""


class PreconditionFailed(NumradError):
    """A required operator hypothesis does not hold; the message names it."""


class InvalidPartition(NumradError):
    """Block partition grid is incomplete or shape-inconsistent."""


class SchemeParameterMissing(NumradError):
    """Pinch scheme requires parameters that were not supplied."""


class UnknownBoundId(NumradError):
    """Bound identifier is not in the registry."""


class ArityMismatch(NumradError):
    """No compatible generator (or input) for the bound's arity."""


class ResamplingExhausted(NumradError):
    """Generator failed to satisfy a filtered hypothesis within the attempt cap."""


class MatrixFormatError(NumradError):
    """JSON payload does not describe a valid matrix, pair, or partition."""
