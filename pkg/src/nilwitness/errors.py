"""Exception types shared across the library."""


class LinalgError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(LinalgError):
    """Operands live over different coefficient fields."""


class DivisionByZero(LinalgError, ZeroDivisionError):
    """Inverse or quotient of a zero (or non-invertible) element."""


class ParseError(LinalgError, ValueError):
    """Malformed scalar token, matrix file, or script file."""


class DimensionMismatch(LinalgError):
    """Shapes do not conform for the requested operation."""


class NotSquare(DimensionMismatch):
    """A square matrix is required."""


class IndexOutOfRange(LinalgError, IndexError):
    """Row index outside the matrix when replaying an operation."""


class InvalidOp(LinalgError):
    """Structurally invalid elementary row operation."""


class SingularMatrix(LinalgError):
    """Inverse requested of a matrix with deficient rank."""


class NonSingular(LinalgError):
    """A singular matrix is required (the input has full rank)."""


class NotRowEquivalent(LinalgError):
    """The two matrices have different reduced forms."""


class FullKernel(LinalgError):
    """The kernel already spans the whole space; nothing to extend."""


class SingularBasis(LinalgError):
    """Candidate basis columns do not assemble to an invertible matrix."""


class InvalidParams(LinalgError, ValueError):
    """Parameters outside the documented domain."""


class VerificationError(LinalgError):
    """A certificate or construction post-check failed."""
