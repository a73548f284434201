"""Null-space bases read off the reduced form, and their extension to a
basis of the whole column space.

The kernel basis is the canonical one of "special solutions": one vector
per free column, carrying a 1 in that free position and 0 in every other
free position. Reading it off the RREF makes it deterministic and linearly
independent by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, FieldMismatch, FullKernel, SingularBasis, SingularMatrix
from .matrix import Matrix, RrefResult


@dataclass(frozen=True)
class KernelBasis:
    """Special-solution basis of the right null space, as n x 1 columns."""

    vectors: tuple[Matrix, ...]
    source_rref: RrefResult

    @property
    def nullity(self) -> int:
        return len(self.vectors)


def special_solutions(reduced: RrefResult) -> KernelBasis:
    """Kernel basis read off an already-computed reduction."""
    rref = reduced.rref
    field = rref.field
    n = rref.ncols
    one, zero = field.one(), field.zero()
    vectors = []
    for f in reduced.free_cols:
        entries = [zero] * n
        entries[f - 1] = one
        for row_idx, p in enumerate(reduced.pivot_cols, start=1):
            entries[p - 1] = -rref.entry(row_idx, f)
        vectors.append(Matrix.column(field, entries))
    return KernelBasis(tuple(vectors), reduced)


def null_space_basis(matrix: Matrix) -> KernelBasis:
    """Canonical basis of {v : M v = 0}; empty when M has full column rank."""
    return special_solutions(matrix.rref())


@dataclass(frozen=True)
class ExtensionBasis:
    """Standard basis columns completing a kernel basis to a basis of F^n.

    The assembled matrix [z_1 ... z_{n-l}, k_1 ... k_l] must be invertible;
    this is checked at construction.
    """

    z_vectors: tuple[Matrix, ...]
    kernel: KernelBasis

    def __post_init__(self):
        n = self.kernel.source_rref.rref.ncols
        if len(self.z_vectors) + self.kernel.nullity != n:
            raise SingularBasis(
                f"{len(self.z_vectors)} extension and {self.kernel.nullity} kernel "
                f"columns cannot assemble to an invertible {n}x{n} matrix"
            )
        for z in self.z_vectors:
            if z.ncols != 1 or z.nrows != n:
                raise SingularBasis(f"extension vector must be {n}x1, got {z.nrows}x{z.ncols}")
            nonzero = [e for e in z.entries if e]
            if len(nonzero) != 1 or not nonzero[0].is_one():
                raise SingularBasis(f"extension vector is not a standard basis column: {z!r}")
        try:
            self.assembled().inverse()
        except SingularMatrix as exc:
            raise SingularBasis(f"assembled basis matrix is singular: {exc}") from exc

    def assembled(self) -> Matrix:
        """The n x n matrix whose columns are z_1 ... z_{n-l}, k_1 ... k_l."""
        columns = [v.entries for v in self.z_vectors + self.kernel.vectors]
        field = self.kernel.source_rref.rref.field
        return Matrix.from_columns(field, columns)


def extend_to_basis(kernel: KernelBasis) -> ExtensionBasis:
    """Complete the kernel basis with standard basis columns.

    One e_p per pivot column p, ascending. Unlike a hand-picked extension,
    this choice needs no genericity condition: pivot-position standard
    vectors always complete the special solutions to a basis.
    """
    reduced = kernel.source_rref
    n = reduced.rref.ncols
    if kernel.nullity == n:
        raise FullKernel("kernel already spans the space; nothing to extend")
    field = reduced.rref.field
    one, zero = field.one(), field.zero()
    z_vectors = tuple(
        Matrix.column(field, [one if i == p - 1 else zero for i in range(n)])
        for p in reduced.pivot_cols
    )
    return ExtensionBasis(z_vectors, kernel)


def same_null_space(a: Matrix, b: Matrix) -> bool:
    """Whether the two matrices annihilate exactly the same vectors.

    True iff the nullities agree and each matrix kills every basis vector
    of the other's kernel.
    """
    if a.field != b.field:
        raise FieldMismatch(f"comparing kernels over {a.field} and {b.field}")
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise DimensionMismatch(
            f"comparing kernels of {a.nrows}x{a.ncols} and {b.nrows}x{b.ncols} matrices"
        )
    ka = null_space_basis(a)
    kb = null_space_basis(b)
    if ka.nullity != kb.nullity:
        return False
    return all((a @ v).is_zero() for v in kb.vectors) and all(
        (b @ v).is_zero() for v in ka.vectors
    )
