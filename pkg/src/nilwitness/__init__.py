"""Exact linear algebra over Q and GF(p): reduced row echelon form with
replayable operation scripts, kernel bases, and a constructive guarantee
that a nilpotent matrix with the same reduced form exists for any singular
square input, delivered as a verifiable certificate.
"""

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    FullKernel,
    IndexOutOfRange,
    InvalidOp,
    InvalidParams,
    LinalgError,
    NonSingular,
    NotRowEquivalent,
    NotSquare,
    ParseError,
    SingularBasis,
    SingularMatrix,
    VerificationError,
)
from .fields import GF, Q, Field, PrimeField, RationalField, Scalar
from .kernel import (
    ExtensionBasis,
    KernelBasis,
    extend_to_basis,
    null_space_basis,
    same_null_space,
    special_solutions,
)
from .matrix import AddMul, Matrix, RowScript, RrefResult, Scale, Swap, is_rref
from .textio import (
    matrix_to_text,
    parse_matrix,
    parse_matrix_stream,
    parse_script,
    script_to_text,
)
from .witness import (
    WitnessCertificate,
    build_shift_nilpotent,
    catalog_3x3,
    nilpotent_index,
    rank2_nilpotent,
    rank2_nilpotent_a0,
    rank2_nilpotent_a0_candidates,
    rank2_nilpotent_script,
    rank2_nilpotent_script_candidates,
    row_equivalent,
    witness,
    witness_script,
)

__version__ = "0.1.0"

__all__ = [
    "AddMul",
    "DimensionMismatch",
    "DivisionByZero",
    "ExtensionBasis",
    "Field",
    "FieldMismatch",
    "FullKernel",
    "GF",
    "IndexOutOfRange",
    "InvalidOp",
    "InvalidParams",
    "KernelBasis",
    "LinalgError",
    "Matrix",
    "NonSingular",
    "NotRowEquivalent",
    "NotSquare",
    "ParseError",
    "PrimeField",
    "Q",
    "RationalField",
    "RowScript",
    "RrefResult",
    "Scalar",
    "Scale",
    "SingularBasis",
    "SingularMatrix",
    "Swap",
    "VerificationError",
    "WitnessCertificate",
    "build_shift_nilpotent",
    "catalog_3x3",
    "extend_to_basis",
    "is_rref",
    "matrix_to_text",
    "nilpotent_index",
    "null_space_basis",
    "parse_matrix",
    "parse_matrix_stream",
    "parse_script",
    "rank2_nilpotent",
    "rank2_nilpotent_a0",
    "rank2_nilpotent_a0_candidates",
    "rank2_nilpotent_script",
    "rank2_nilpotent_script_candidates",
    "row_equivalent",
    "same_null_space",
    "script_to_text",
    "special_solutions",
    "witness",
    "witness_script",
]
