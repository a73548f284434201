"""Dense exact matrices, elementary row operations, and Gauss-Jordan reduction.

Matrices are immutable; every operation returns a new matrix. Row indices
are 1-based throughout the public surface (scripts, pivot columns), matching
the usual textbook numbering of rows I, II, III.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    IndexOutOfRange,
    InvalidOp,
    NotSquare,
    SingularMatrix,
)
from .fields import Field, Scalar


def _check_row_index(i: int, m: int):
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"row {i} out of range for {m} rows")


@dataclass(frozen=True)
class Swap:
    """Interchange rows i and j."""

    i: int
    j: int

    def __post_init__(self):
        if not (isinstance(self.i, int) and isinstance(self.j, int)) or self.i < 1 or self.j < 1:
            raise InvalidOp(f"swap indices must be positive integers, got {self.i}, {self.j}")
        if self.i == self.j:
            raise InvalidOp("swap needs two distinct rows")

    def inverse(self) -> "Swap":
        return self

    def _apply(self, rows, field):
        _check_row_index(self.i, len(rows))
        _check_row_index(self.j, len(rows))
        rows[self.i - 1], rows[self.j - 1] = rows[self.j - 1], rows[self.i - 1]


@dataclass(frozen=True)
class Scale:
    """Multiply row i by a nonzero coefficient c."""

    i: int
    c: Scalar

    def __post_init__(self):
        if not isinstance(self.i, int) or self.i < 1:
            raise InvalidOp(f"scale index must be a positive integer, got {self.i}")
        if not isinstance(self.c, Scalar):
            raise InvalidOp("scale coefficient must be a Scalar")
        if self.c.is_zero():
            raise InvalidOp("scaling by zero is not invertible")

    def inverse(self) -> "Scale":
        return Scale(self.i, self.c.inverse())

    def _apply(self, rows, field):
        _check_row_index(self.i, len(rows))
        if self.c.field != field:
            raise FieldMismatch(f"coefficient over {self.c.field} applied to a {field} matrix")
        if self.c.is_zero():
            raise InvalidOp("scaling by zero is not invertible")
        rows[self.i - 1] = [self.c * e for e in rows[self.i - 1]]


@dataclass(frozen=True)
class AddMul:
    """Row i gains c times row j: row_i <- row_i + c * row_j."""

    i: int
    c: Scalar
    j: int

    def __post_init__(self):
        if not (isinstance(self.i, int) and isinstance(self.j, int)) or self.i < 1 or self.j < 1:
            raise InvalidOp(f"addmul indices must be positive integers, got {self.i}, {self.j}")
        if self.i == self.j:
            raise InvalidOp("addmul target and source rows must differ")
        if not isinstance(self.c, Scalar):
            raise InvalidOp("addmul coefficient must be a Scalar")

    def inverse(self) -> "AddMul":
        return AddMul(self.i, -self.c, self.j)

    def _apply(self, rows, field):
        _check_row_index(self.i, len(rows))
        _check_row_index(self.j, len(rows))
        if self.c.field != field:
            raise FieldMismatch(f"coefficient over {self.c.field} applied to a {field} matrix")
        src = rows[self.j - 1]
        rows[self.i - 1] = [a + self.c * b for a, b in zip(rows[self.i - 1], src)]


RowOp = Union[Swap, Scale, AddMul]


class RowScript:
    """An ordered, invertible list of elementary row operations."""

    __slots__ = ("ops",)

    def __init__(self, ops: Iterable[RowOp] = ()):
        ops = tuple(ops)
        for op in ops:
            if not isinstance(op, (Swap, Scale, AddMul)):
                raise InvalidOp(f"not a row operation: {op!r}")
        self.ops = ops

    def inverse(self) -> "RowScript":
        """Reversed script of inverted operations; undoes this script exactly."""
        return RowScript(op.inverse() for op in reversed(self.ops))

    def __iter__(self):
        return iter(self.ops)

    def __len__(self):
        return len(self.ops)

    def __bool__(self):
        return bool(self.ops)

    def __add__(self, other):
        if not isinstance(other, RowScript):
            return NotImplemented
        return RowScript(self.ops + other.ops)

    def __eq__(self, other):
        if not isinstance(other, RowScript):
            return NotImplemented
        return self.ops == other.ops

    def __hash__(self):
        return hash(self.ops)

    def __repr__(self):
        return f"RowScript({list(self.ops)!r})"


@dataclass(frozen=True)
class RrefResult:
    """A reduced matrix together with the script that produced it.

    pivot_cols and free_cols are 1-based and ascending; rank == len(pivot_cols).
    """

    rref: "Matrix"
    script: RowScript
    rank: int
    pivot_cols: tuple[int, ...]
    free_cols: tuple[int, ...]


class Matrix:
    """A dense m x n matrix over a fixed field, immutable after construction."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: Field, rows):
        entries = []
        width = None
        for row in rows:
            converted = tuple(field.scalar(e) for e in row)
            if width is None:
                width = len(converted)
            elif len(converted) != width:
                raise DimensionMismatch("ragged rows")
            entries.append(converted)
        if not entries or not width:
            raise DimensionMismatch("matrix dimensions must be positive")
        self.field = field
        self.nrows = len(entries)
        self.ncols = width
        self._rows = tuple(entries)

    # ---- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, field: Field, m: int, n: int) -> "Matrix":
        z = field.zero()
        return cls(field, [[z] * n for _ in range(m)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, field: Field, entries) -> "Matrix":
        return cls(field, [[e] for e in entries])

    @classmethod
    def from_columns(cls, field: Field, columns) -> "Matrix":
        cols = [tuple(field.scalar(e) for e in col) for col in columns]
        if not cols:
            raise DimensionMismatch("matrix dimensions must be positive")
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise DimensionMismatch("ragged columns")
        return cls(field, [[c[i] for c in cols] for i in range(n)])

    # ---- structure ----------------------------------------------------

    @property
    def rows(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._rows

    @property
    def entries(self) -> tuple[Scalar, ...]:
        """Row-major flat view; for an n x 1 column this is the vector itself."""
        return tuple(e for row in self._rows for e in row)

    def entry(self, i: int, j: int) -> Scalar:
        """1-based entry access."""
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise IndexOutOfRange(f"({i}, {j}) outside a {self.nrows}x{self.ncols} matrix")
        return self._rows[i - 1][j - 1]

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self._rows for e in row)

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.field, self._rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self._rows)
        return f"Matrix({self.field} {self.nrows}x{self.ncols}: [{body}])"

    # ---- arithmetic ---------------------------------------------------

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatch(f"product of {self.field} and {other.field} matrices")
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols} does not conform"
            )
        zero = self.field.zero()
        out = []
        for row in self._rows:
            acc = [zero] * other.ncols
            for k, e in enumerate(row):
                if e:
                    src = other._rows[k]
                    acc = [a + e * b for a, b in zip(acc, src)]
            out.append(acc)
        return Matrix(self.field, out)

    def __pow__(self, k: int):
        if not self.is_square:
            raise NotSquare(f"power of a {self.nrows}x{self.ncols} matrix")
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {k!r}")
        if k == 0:
            return Matrix.identity(self.field, self.nrows)
        acc = self
        for _ in range(k - 1):
            if acc.is_zero():  # powers of a vanished product stay zero
                return acc
            acc = acc @ self
        return acc

    def trace(self) -> Scalar:
        if not self.is_square:
            raise NotSquare(f"trace of a {self.nrows}x{self.ncols} matrix")
        t = self.field.zero()
        for i in range(self.nrows):
            t = t + self._rows[i][i]
        return t

    def inverse(self) -> "Matrix":
        """Exact inverse via Gauss-Jordan reduction of the augmented block [M | I]."""
        if not self.is_square:
            raise NotSquare(f"inverse of a {self.nrows}x{self.ncols} matrix")
        n = self.nrows
        one, zero = self.field.one(), self.field.zero()
        aug = Matrix(
            self.field,
            [
                list(row) + [one if i == j else zero for j in range(n)]
                for i, row in enumerate(self._rows)
            ],
        )
        result = aug.rref()
        left_rank = sum(1 for p in result.pivot_cols if p <= n)
        if left_rank < n:
            raise SingularMatrix(f"rank {left_rank} < {n}; no inverse")
        return Matrix(self.field, [row[n:] for row in result.rref._rows])

    # ---- row reduction ------------------------------------------------

    def apply(self, script) -> "Matrix":
        """Replay a RowScript (or a single RowOp, or any iterable of them)."""
        if isinstance(script, RowScript):
            ops = script.ops
        elif isinstance(script, (Swap, Scale, AddMul)):
            ops = (script,)
        else:
            ops = tuple(script)
        if not ops:
            return self
        rows = [list(r) for r in self._rows]
        for op in ops:
            if not isinstance(op, (Swap, Scale, AddMul)):
                raise InvalidOp(f"not a row operation: {op!r}")
            op._apply(rows, self.field)
        return Matrix(self.field, rows)

    def rref(self) -> RrefResult:
        """Gauss-Jordan reduction to reduced row echelon form.

        Pivots are chosen as the topmost nonzero entry of each column (exact
        arithmetic needs no magnitude pivoting); the pivot row is scaled to a
        leading 1 immediately and the column is cleared above and below in
        the same pass. The emitted script replays the reduction exactly, so
        the output is deterministic for a given input.
        """
        m, n = self.nrows, self.ncols
        rows = [list(r) for r in self._rows]
        ops: list[RowOp] = []
        pivots: list[int] = []
        one = self.field.one()
        r = 0
        for c in range(n):
            pivot_row = next((i for i in range(r, m) if rows[i][c]), None)
            if pivot_row is None:
                continue
            if pivot_row != r:
                rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
                ops.append(Swap(r + 1, pivot_row + 1))
            if rows[r][c] != one:
                coeff = rows[r][c].inverse()
                rows[r] = [coeff * e for e in rows[r]]
                ops.append(Scale(r + 1, coeff))
            for i in range(m):
                if i == r or not rows[i][c]:
                    continue
                coeff = -rows[i][c]
                pivot = rows[r]
                rows[i] = [a + coeff * b for a, b in zip(rows[i], pivot)]
                ops.append(AddMul(i + 1, coeff, r + 1))
            pivots.append(c + 1)
            r += 1
            if r == m:
                break
        pivot_cols = tuple(pivots)
        taken = set(pivot_cols)
        free_cols = tuple(j for j in range(1, n + 1) if j not in taken)
        return RrefResult(
            rref=Matrix(self.field, rows),
            script=RowScript(ops),
            rank=len(pivot_cols),
            pivot_cols=pivot_cols,
            free_cols=free_cols,
        )


def is_rref(matrix: Matrix) -> bool:
    """Structural check of the four reduced-echelon conditions.

    Independent of the reducer: it inspects entries only, so it can vet
    rref() output (and anything else) without trusting the elimination.
    """
    lead_cols: list[int] = []
    seen_zero_row = False
    for row in matrix.rows:
        lead = next((idx for idx, e in enumerate(row) if e), None)
        if lead is None:
            seen_zero_row = True
            continue
        if seen_zero_row:
            return False  # a nonzero row below a zero row
        if not row[lead].is_one():
            return False  # leading entry must be 1
        if lead_cols and lead <= lead_cols[-1]:
            return False  # pivots must move strictly right
        lead_cols.append(lead)
    for r, c in enumerate(lead_cols):
        for i in range(matrix.nrows):
            e = matrix.rows[i][c]
            if i == r:
                if not e.is_one():
                    return False
            elif e:
                return False  # pivot column must be a standard basis column
    return True
