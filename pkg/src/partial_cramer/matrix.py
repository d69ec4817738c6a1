"""Immutable dense matrices, column vectors and the ``X' = R X`` system container.

Storage is row-major tuples. ``m[i, k]`` uses Python's 0-based indices;
the operations that take equation/variable numbers (``leading_submatrix``,
``replace_column`` and everything downstream) are 1-based, and so are
their error messages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, MixedScalarKindError
from .scalars import Scalar, ScalarKind, coerce, format_scalar, infer_kind, one, zero


@dataclass(frozen=True, slots=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple
    kind: ScalarKind

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise DimensionError(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], kind: ScalarKind | str | None = None) -> "Matrix":
        if not rows:
            raise DimensionError("matrix needs at least one row")
        ncols = len(rows[0])
        for i, row in enumerate(rows, start=1):
            if len(row) != ncols:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {ncols}")
        return make_matrix(len(rows), ncols, [v for row in rows for v in row], kind)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, k = index
        if not (0 <= i < self.rows and 0 <= k < self.cols):
            raise IndexError(f"index ({i}, {k}) outside {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + k]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, k: int) -> tuple:
        return self.entries[k::self.cols]

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __iter__(self) -> Iterator[tuple]:
        return (self.row(i) for i in range(self.rows))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(v for k in range(self.cols) for v in self.column(k)), self.kind)

    def __matmul__(self, other: "Matrix | ColumnVector"):
        if isinstance(other, ColumnVector):
            return matvec(self, other)
        return matmul(self, other)

    def scaled(self, c: object) -> "Matrix":
        c = coerce(c, self.kind)
        return Matrix(self.rows, self.cols, tuple(c * v for v in self.entries), self.kind)

    def __str__(self) -> str:
        cells = [[format_scalar(v) for v in row] for row in self]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)


@dataclass(frozen=True, slots=True)
class ColumnVector:
    dim: int
    entries: tuple
    kind: ScalarKind

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise DimensionError("vector dimension must be positive")
        if len(self.entries) != self.dim:
            raise DimensionError(f"vector of dim {self.dim} has {len(self.entries)} entries")

    @classmethod
    def of(cls, values: Iterable[object], kind: ScalarKind | str | None = None) -> "ColumnVector":
        values = list(values)
        k = infer_kind(values, kind)
        return cls(len(values), tuple(coerce(v, k) for v in values), k)

    def __getitem__(self, i: int) -> Scalar:
        return self.entries[i]

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.entries)

    def __len__(self) -> int:
        return self.dim

    def __sub__(self, other: "ColumnVector") -> "ColumnVector":
        _same_shape(self, other)
        return ColumnVector(self.dim, tuple(a - b for a, b in zip(self.entries, other.entries)), self.kind)

    def __add__(self, other: "ColumnVector") -> "ColumnVector":
        _same_shape(self, other)
        return ColumnVector(self.dim, tuple(a + b for a, b in zip(self.entries, other.entries)), self.kind)

    def scaled(self, c: object) -> "ColumnVector":
        c = coerce(c, self.kind)
        return ColumnVector(self.dim, tuple(c * v for v in self.entries), self.kind)

    def head(self, j: int) -> "ColumnVector":
        if not 1 <= j <= self.dim:
            raise DimensionError(f"cannot take the first {j} entries of a {self.dim}-vector")
        return ColumnVector(j, self.entries[:j], self.kind)

    def norm_inf(self) -> Scalar:
        return max(abs(v) for v in self.entries)


def _same_shape(a: ColumnVector, b: ColumnVector) -> None:
    if a.dim != b.dim:
        raise DimensionError(f"vector dimensions differ: {a.dim} vs {b.dim}")
    if a.kind is not b.kind:
        raise MixedScalarKindError("cannot combine rational and float vectors")


@dataclass(frozen=True, slots=True)
class SystemSpec:
    """The linear system ``x_prime = r @ x`` with ``r`` square and invertible in intent."""

    r: Matrix
    x_prime: ColumnVector

    def __post_init__(self) -> None:
        if not self.r.is_square:
            raise DimensionError(f"system matrix must be square, got {self.r.rows}x{self.r.cols}")
        if self.r.rows != self.x_prime.dim:
            raise DimensionError(f"matrix is {self.r.rows}x{self.r.cols} but right-hand side has {self.x_prime.dim} entries")
        if self.r.kind is not self.x_prime.kind:
            raise MixedScalarKindError("matrix and right-hand side use different scalar kinds")

    @property
    def n(self) -> int:
        return self.r.rows

    @property
    def kind(self) -> ScalarKind:
        return self.r.kind

    @classmethod
    def from_lists(cls, rows, rhs, kind: ScalarKind | str | None = None) -> "SystemSpec":
        k = infer_kind([v for row in rows for v in row] + list(rhs), kind)
        return cls(Matrix.from_rows(rows, k), ColumnVector.of(rhs, k))

    def permuted(self, perm: Sequence[int]) -> "SystemSpec":
        """Rows reordered so that new row ``i`` is old row ``perm[i-1]`` (1-based labels)."""
        rows = [self.r.row(p - 1) for p in perm]
        rhs = [self.x_prime[p - 1] for p in perm]
        return SystemSpec(
            Matrix(self.n, self.n, tuple(v for row in rows for v in row), self.kind),
            ColumnVector(self.n, tuple(rhs), self.kind),
        )


def make_matrix(rows: int, cols: int, entries: Sequence[object], kind: ScalarKind | str | None = None) -> Matrix:
    """Build a matrix from row-major ``entries``; rationals end up in lowest terms."""
    entries = list(entries)
    if rows < 1 or cols < 1 or len(entries) != rows * cols:
        raise DimensionError(f"{rows}x{cols} matrix needs {max(rows, 0) * max(cols, 0)} entries, got {len(entries)}")
    k = infer_kind(entries, kind)
    return Matrix(rows, cols, tuple(coerce(v, k) for v in entries), k)


def identity(n: int, kind: ScalarKind | str = ScalarKind.RATIONAL) -> Matrix:
    kind = ScalarKind.parse(kind)
    o, z = one(kind), zero(kind)
    return Matrix(n, n, tuple(o if i == k else z for i in range(n) for k in range(n)), kind)


def leading_submatrix(m: Matrix, j: int) -> Matrix:
    """Top-left ``j x j`` block of a square matrix."""
    if not m.is_square:
        raise DimensionError(f"leading submatrix needs a square matrix, got {m.rows}x{m.cols}")
    if not 1 <= j <= m.rows:
        raise DimensionError(f"block size j={j} outside 1..{m.rows}")
    if j == m.rows:
        return m
    return Matrix(j, j, tuple(v for i in range(j) for v in m.row(i)[:j]), m.kind)


def replace_column(m: Matrix, i: int, v: ColumnVector) -> Matrix:
    """Copy of square ``m`` with column ``i`` (1-based) replaced by ``v``."""
    if not m.is_square:
        raise DimensionError(f"column replacement needs a square matrix, got {m.rows}x{m.cols}")
    if not 1 <= i <= m.cols:
        raise DimensionError(f"column index {i} outside 1..{m.cols}")
    if v.dim != m.rows:
        raise DimensionError(f"replacement column has {v.dim} entries, matrix has {m.rows} rows")
    if v.kind is not m.kind:
        raise MixedScalarKindError("replacement column kind differs from matrix kind")
    entries = list(m.entries)
    for r in range(m.rows):
        entries[r * m.cols + i - 1] = v.entries[r]
    return Matrix(m.rows, m.cols, tuple(entries), m.kind)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.kind is not b.kind:
        raise MixedScalarKindError("cannot multiply rational and float matrices")
    if a.kind is ScalarKind.RATIONAL:
        return _matmul_rational(a, b)
    bcols = [b.column(k) for k in range(b.cols)]
    out = []
    for i in range(a.rows):
        row = a.row(i)
        out.extend(sum((x * y for x, y in zip(row, col)), zero(a.kind)) for col in bcols)
    return Matrix(a.rows, b.cols, tuple(out), a.kind)


def _scaled_ints(values: Sequence[Fraction]) -> tuple[list[int], int]:
    scale = math.lcm(*(Fraction(v).denominator for v in values))
    return [int(v * scale) for v in values], scale


def _matmul_rational(a: Matrix, b: Matrix) -> Matrix:
    # integer dot products with one normalisation per entry; far cheaper than Fraction sums
    arows = [_scaled_ints(a.row(i)) for i in range(a.rows)]
    bcols = [_scaled_ints(b.column(k)) for k in range(b.cols)]
    out = [Fraction(sum(map(int.__mul__, ra, cb)), sa * sb) for ra, sa in arows for cb, sb in bcols]
    return Matrix(a.rows, b.cols, tuple(out), a.kind)


def matvec(a: Matrix, v: ColumnVector) -> ColumnVector:
    if a.cols != v.dim:
        raise DimensionError(f"cannot apply {a.rows}x{a.cols} matrix to a {v.dim}-vector")
    if a.kind is not v.kind:
        raise MixedScalarKindError("cannot apply a matrix to a vector of another kind")
    z = zero(a.kind)
    return ColumnVector(a.rows, tuple(sum((x * y for x, y in zip(a.row(i), v.entries)), z) for i in range(a.rows)), a.kind)
