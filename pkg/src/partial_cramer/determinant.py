"""Determinants.

Three routes are provided:

* :func:`det_leibniz` sums over permutations with the Levi-Civita sign. It
  is exponential and exists as the reference the others are tested against.
* :func:`det_fast` is fraction-free (Bareiss) elimination for rationals and
  partially pivoted LU for floats.
* :func:`column_replacement_determinants` runs one fraction-free
  Gauss-Jordan sweep over ``[A | V_1 ... V_m]`` and returns ``det A``
  together with every ``det A^(i)(V_c)`` (column ``i`` replaced by ``V_c``),
  which is exactly the set of Cramer numerators.

Rational inputs are scaled row-wise to integers first; the scale is divided
back out at the end, so intermediate values stay integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .errors import DimensionError
from .matrix import ColumnVector, Matrix, leading_submatrix, replace_column
from .scalars import Scalar, ScalarKind, zero

LEIBNIZ_MAX_N = 10


@dataclass(frozen=True, slots=True)
class MinorSequence:
    """Leading principal minors ``D_1 .. D_n``; ``values[j-1]`` is ``D_j``."""

    values: tuple
    n: int

    def __post_init__(self) -> None:
        if len(self.values) != self.n:
            raise DimensionError(f"minor sequence of length {len(self.values)} for n={self.n}")

    def __getitem__(self, j: int) -> Scalar:
        """1-based access: ``minors[j]`` is ``D_j``."""
        if not 1 <= j <= self.n:
            raise IndexError(f"minor index {j} outside 1..{self.n}")
        return self.values[j - 1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return self.n

    def first_zero(self) -> int | None:
        for j, d in enumerate(self.values, start=1):
            if d == 0:
                return j
        return None


def _require_square(m: Matrix, what: str) -> None:
    if not m.is_square:
        raise DimensionError(f"{what} needs a square matrix, got {m.rows}x{m.cols}")


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of ``0..n-1`` via cycle decomposition."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_leibniz(m: Matrix) -> Scalar:
    """Sum of ``sign(s) * R[0, s0] * ... * R[n-1, s_{n-1}]`` over all permutations ``s``."""
    _require_square(m, "determinant")
    n = m.rows
    if n > LEIBNIZ_MAX_N:
        raise DimensionError(f"Leibniz determinant limited to n <= {LEIBNIZ_MAX_N}, got n={n}")
    rows = m.to_rows()
    total = zero(m.kind)
    for perm in permutations(range(n)):
        term = rows[0][perm[0]]
        for i in range(1, n):
            if term == 0:
                break
            term = term * rows[i][perm[i]]
        if term != 0:
            total += term if permutation_sign(perm) > 0 else -term
    return total


def _integer_rows(rows: list[list[Fraction]]) -> tuple[list[list[int]], list[int]]:
    """Scale each row by the lcm of its denominators; return integer rows and the scales."""
    out = []
    scales = []
    for row in rows:
        s = 1
        for v in row:
            s = s * v.denominator // math.gcd(s, v.denominator)
        out.append([int(v * s) for v in row])
        scales.append(s)
    return out, scales


def _bareiss_det(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        p = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            if aik == 0:
                if p != prev:
                    for j in range(k + 1, n):
                        ri[j] = p * ri[j] // prev
            else:
                for j in range(k + 1, n):
                    ri[j] = (p * ri[j] - aik * rk[j]) // prev
        prev = p
    return sign * a[n - 1][n - 1]


def _lu_det(rows: list[list[float]]) -> float:
    n = len(rows)
    a = [list(r) for r in rows]
    det = 1.0
    for k in range(n):
        piv = max(range(k, n), key=lambda r: abs(a[r][k]))
        if a[piv][k] == 0.0:
            return 0.0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        p = a[k][k]
        det *= p
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f != 0.0:
                ri, rk = a[i], a[k]
                for j in range(k + 1, n):
                    ri[j] -= f * rk[j]
    return det


def det_fast(m: Matrix) -> Scalar:
    """Cubic-cost determinant: Bareiss for rationals, pivoted LU for floats."""
    _require_square(m, "determinant")
    if m.kind is ScalarKind.FLOAT:
        return _lu_det(m.to_rows())
    ints, scales = _integer_rows(m.to_rows())
    return Fraction(_bareiss_det(ints), math.prod(scales))


def leading_minors(m: Matrix) -> MinorSequence:
    """All leading principal minors from a single unpivoted elimination.

    Without row exchanges the k-th Bareiss pivot is ``D_k`` itself (times the
    row scaling). If a pivot vanishes the elimination cannot continue, and
    the remaining minors are computed block by block.
    """
    _require_square(m, "leading minors")
    n = m.rows
    values: list[Scalar] = []
    if m.kind is ScalarKind.FLOAT:
        a = m.to_rows()
        running = 1.0
        for k in range(n):
            p = a[k][k]
            if p == 0.0:
                break
            running *= p
            values.append(running)
            for i in range(k + 1, n):
                f = a[i][k] / p
                if f != 0.0:
                    for j in range(k + 1, n):
                        a[i][j] -= f * a[k][j]
    else:
        a, scales = _integer_rows(m.to_rows())
        prev = 1
        prefix = 1
        for k in range(n):
            p = a[k][k]
            prefix *= scales[k]
            if p == 0:
                break
            values.append(Fraction(p, prefix))
            rk = a[k]
            for i in range(k + 1, n):
                ri = a[i]
                aik = ri[k]
                for j in range(k + 1, n):
                    ri[j] = (p * ri[j] - aik * rk[j]) // prev
            prev = p
    for j in range(len(values) + 1, n + 1):
        values.append(det_fast(leading_submatrix(m, j)))
    return MinorSequence(tuple(values), n)


@dataclass(frozen=True, slots=True)
class ReplacementDeterminants:
    """Result of :func:`column_replacement_determinants`.

    ``numerators[c][i]`` is ``det A^(i+1)(V_c)``; ``solutions[c]`` is the
    solution of ``A y = V_c`` (``None`` when ``det`` is zero).
    """

    det: Scalar
    numerators: tuple
    solutions: tuple | None


def _ff_gauss_jordan(a: list[list[int]], n: int) -> tuple[int, list[list[int]]]:
    """Fraction-free Gauss-Jordan on an ``n x (n + m)`` integer array.

    On return the left block is ``d * I`` and the right block holds the
    numerators ``det A^(i)(V)`` of the row-exchanged system; ``d`` is returned
    with the exchange sign already applied, and the right block is sign
    corrected too.
    """
    width = len(a[0])
    sign = 1
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0, []
        p = a[k][k]
        rk = a[k]
        for i in range(n):
            if i == k:
                continue
            ri = a[i]
            aik = ri[k]
            if aik == 0:
                for j in range(k + 1, width):
                    ri[j] = p * ri[j] // prev
            else:
                for j in range(k + 1, width):
                    ri[j] = (p * ri[j] - aik * rk[j]) // prev
                ri[k] = 0
            if i < k:
                ri[i] = p
        prev = p
    right = [[sign * a[i][j] for i in range(n)] for j in range(n, width)]
    return sign * prev, right


def _lu_solve_columns(rows: list[list[float]], columns: list[list[float]]) -> tuple[float, list[list[float]] | None]:
    n = len(rows)
    m = len(columns)
    a = [list(rows[i]) + [col[i] for col in columns] for i in range(n)]
    det = 1.0
    for k in range(n):
        piv = max(range(k, n), key=lambda r: abs(a[r][k]))
        if a[piv][k] == 0.0:
            return 0.0, None
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        p = a[k][k]
        det *= p
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f != 0.0:
                ri, rk = a[i], a[k]
                for j in range(k + 1, n + m):
                    ri[j] -= f * rk[j]
    sols = []
    for c in range(m):
        x = [0.0] * n
        for i in range(n - 1, -1, -1):
            s = a[i][n + c]
            for k in range(i + 1, n):
                s -= a[i][k] * x[k]
            x[i] = s / a[i][i]
        sols.append(x)
    return det, sols


def column_replacement_determinants(a: Matrix, columns: Sequence[ColumnVector]) -> ReplacementDeterminants:
    """``det a`` and ``det a^(i)(v)`` for every column index ``i`` and every ``v`` in ``columns``.

    Rationals are exact. For floats the numerators are reconstructed as
    ``det * y`` from a pivoted LU solve, and ``solutions`` are the LU
    solutions themselves (backward stable, unlike forming the quotients).
    """
    _require_square(a, "column replacement")
    n = a.rows
    for v in columns:
        if v.dim != n:
            raise DimensionError(f"replacement column has {v.dim} entries, matrix has {n} rows")
        if v.kind is not a.kind:
            raise DimensionError("replacement column kind differs from matrix kind")
    if a.kind is ScalarKind.FLOAT:
        det, sols = _lu_solve_columns(a.to_rows(), [list(v.entries) for v in columns])
        if sols is None:
            return ReplacementDeterminants(0.0, tuple(tuple(0.0 for _ in range(n)) for _ in columns), None)
        nums = tuple(tuple(det * y for y in s) for s in sols)
        return ReplacementDeterminants(det, nums, tuple(tuple(s) for s in sols))

    rows = [list(a.row(i)) + [v.entries[i] for v in columns] for i in range(n)]
    ints, scales = _integer_rows(rows)
    scale = math.prod(scales)
    d, right = _ff_gauss_jordan(ints, n)
    if d == 0:
        # singular: numerators are still well defined, evaluate them one by one
        nums = tuple(tuple(det_fast(replace_column(a, i, v)) for i in range(1, n + 1)) for v in columns)
        return ReplacementDeterminants(Fraction(0), nums, None)
    det = Fraction(d, scale)
    nums = tuple(tuple(Fraction(x, scale) for x in col) for col in right)
    sols = tuple(tuple(Fraction(x, d) for x in col) for col in right)
    return ReplacementDeterminants(det, nums, sols)
