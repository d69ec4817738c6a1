"""Reference solvers based on textbook row reduction.

Nothing here touches determinants or the Cramer modules; the results are
used only to check them. Elimination uses partial pivoting (largest
magnitude) for both scalar kinds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .affine import AffineSolution
from .errors import DimensionError, SingularMatrixError, ZeroLeadingMinorError
from .matrix import ColumnVector, Matrix, SystemSpec
from .scalars import ScalarKind, one, zero

FLOAT_PIVOT_RTOL = 1e-14


@dataclass(frozen=True, slots=True)
class OracleSolution:
    x: ColumnVector
    pivot_permutation: tuple[int, ...]


class _Singular(Exception):
    pass


def _reduce(a: list[list], n: int, kind: ScalarKind) -> tuple[list[list], tuple[int, ...], object]:
    """Gauss-Jordan on the ``n`` leading columns of ``a`` (modified in place).

    Returns the reduced rows, the row order (1-based original labels) and
    the product of pivots with the exchange sign, i.e. the determinant of
    the leading ``n x n`` block as a by-product.
    """
    order = list(range(1, n + 1))
    cutoff = 0.0
    if kind is ScalarKind.FLOAT:
        cutoff = FLOAT_PIVOT_RTOL * max([1.0] + [abs(v) for row in a for v in row[:n]])
    det = one(kind)
    for k in range(n):
        piv = max(range(k, n), key=lambda i: abs(a[i][k]))
        if abs(a[piv][k]) <= cutoff:
            raise _Singular
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            order[k], order[piv] = order[piv], order[k]
            det = -det
        p = a[k][k]
        det = det * p
        a[k] = [v / p for v in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [v - f * w for v, w in zip(a[i], a[k])]
    return a, tuple(order), det


def solve_elimination(sys: SystemSpec) -> OracleSolution:
    n = sys.n
    a = [list(sys.r.row(i)) + [sys.x_prime[i]] for i in range(n)]
    try:
        a, order, _ = _reduce(a, n, sys.kind)
    except _Singular:
        raise SingularMatrixError("elimination found no usable pivot") from None
    return OracleSolution(ColumnVector(n, tuple(row[n] for row in a), sys.kind), order)


def partial_solve_by_substitution(sys: SystemSpec, j: int) -> AffineSolution:
    """Maps for ``x_1..x_j`` obtained by treating ``x_{j+1}..x_n`` as symbols.

    Equations ``1..j`` are written as ``R_head x_head = I x'_head - R_tail x_tail``;
    reducing ``[R_head | I | -R_tail]`` leaves the coefficient blocks on the right.
    """
    n, kind = sys.n, sys.kind
    if not 1 <= j <= n:
        raise DimensionError(f"cut j={j} outside 1..{n}")
    o, z = one(kind), zero(kind)
    a = []
    for i in range(j):
        row = sys.r.row(i)
        unit = [o if l == i else z for l in range(j)]
        a.append(list(row[:j]) + unit + [-v for v in row[j:]])
    try:
        a, _, d_j = _reduce(a, j, kind)
    except _Singular:
        raise ZeroLeadingMinorError(j) from None
    prime = Matrix(j, j, tuple(v for row in a for v in row[j:2 * j]), kind)
    tail = None
    if j < n:
        tail = Matrix(j, n - j, tuple(v for row in a for v in row[2 * j:]), kind)
    return AffineSolution(j, n, d_j, prime, tail)
