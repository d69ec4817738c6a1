"""Cramer's rule for a leading subset of the unknowns.

For a cut ``j`` with leading minor ``D_j != 0`` the first ``j`` unknowns are

    x_i = det R^(i)_[j x j](X'_[j] - X'_perp[j]) / D_j,      i = 1..j,

where ``X'_perp[j] = sum_{k>j} x_k * R[1..j, k]`` collects the coupling to
the unknowns that stay free. Because the determinant is linear in the
replaced column, the right-hand side splits into a ``j x j`` block of
coefficients on ``x'_1..x'_j`` (replace with unit vectors) and a
``j x (n-j)`` block on ``x_{j+1}..x_n`` (replace with ``-R[1..j, k]``).
For ``j == n`` this is ordinary Cramer's rule.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .affine import AffineSolution
from .determinant import column_replacement_determinants, det_fast, leading_minors
from .errors import DimensionError, SingularMatrixError, ZeroLeadingMinorError
from .full import DEFAULT_SINGULAR_RTOL, METHODS, is_negligible
from .matrix import ColumnVector, Matrix, SystemSpec, leading_submatrix, replace_column
from .scalars import Scalar, ScalarKind, close, one, zero


@dataclass(frozen=True, slots=True)
class PerpContribution:
    """Coupling block ``R[1..j, j+1..n]``; ``coeffs`` is ``None`` for ``j == n``."""

    j: int
    n: int
    coeffs: Matrix | None

    def column(self, k: int) -> tuple:
        """``(R_1k .. R_jk)`` for ``j < k <= n`` (1-based ``k``)."""
        if self.coeffs is None or not self.j < k <= self.n:
            raise DimensionError(f"column {k} is not a coupling column for cut {self.j} of {self.n}")
        return self.coeffs.column(k - self.j - 1)

    def vector(self, tail: Sequence[Scalar], kind: ScalarKind) -> ColumnVector:
        """``X'_perp[j]`` at ``x_{j+1}..x_n = tail``; the zero vector when ``j == n``."""
        if len(tail) != self.n - self.j:
            raise DimensionError(f"need {self.n - self.j} tail values, got {len(tail)}")
        z = zero(kind)
        if self.coeffs is None:
            return ColumnVector(self.j, (z,) * self.j, kind)
        vals = tuple(sum((c * t for c, t in zip(self.coeffs.row(i), tail)), z) for i in range(self.j))
        return ColumnVector(self.j, vals, kind)


def _check_cut(r: Matrix, j: int) -> None:
    if not r.is_square:
        raise DimensionError(f"system matrix must be square, got {r.rows}x{r.cols}")
    if not 1 <= j <= r.rows:
        raise DimensionError(f"cut j={j} outside 1..{r.rows}")


def perp_contribution(r: Matrix, j: int) -> PerpContribution:
    _check_cut(r, j)
    n = r.rows
    if j == n:
        return PerpContribution(j, n, None)
    entries = tuple(v for i in range(j) for v in r.row(i)[j:])
    return PerpContribution(j, n, Matrix(j, n - j, entries, r.kind))


def _affine_maps(r: Matrix, j: int, method: str, singular_rtol: float) -> AffineSolution:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    _check_cut(r, j)
    n, kind = r.rows, r.kind
    block = leading_submatrix(r, j)
    o, z = one(kind), zero(kind)
    units = [ColumnVector(j, tuple(o if i == l else z for i in range(j)), kind) for l in range(j)]
    perp = perp_contribution(r, j)
    neg_perp = [ColumnVector(j, tuple(-c for c in perp.column(k)), kind) for k in range(j + 1, n + 1)]
    columns = units + neg_perp

    if method == "columns":
        d_j = det_fast(block)
        if is_negligible(d_j, block, singular_rtol):
            raise ZeroLeadingMinorError(j)
        coeff_cols = [[det_fast(replace_column(block, i, v)) / d_j for i in range(1, j + 1)] for v in columns]
    else:
        res = column_replacement_determinants(block, columns)
        d_j = res.det
        if res.solutions is None or is_negligible(d_j, block, singular_rtol):
            raise ZeroLeadingMinorError(j)
        coeff_cols = res.solutions

    prime = Matrix(j, j, tuple(coeff_cols[l][i] for i in range(j) for l in range(j)), kind)
    tail = None
    if j < n:
        tail = Matrix(j, n - j, tuple(coeff_cols[j + k][i] for i in range(j) for k in range(n - j)), kind)
    return AffineSolution(j, n, d_j, prime, tail)


def solve_partial(
    sys: SystemSpec, j: int, *, method: str = "elimination", singular_rtol: float = DEFAULT_SINGULAR_RTOL
) -> AffineSolution:
    """Affine maps for ``x_1..x_j`` in terms of ``x'_1..x'_j`` and ``x_{j+1}..x_n``.

    Only ``D_j`` must be nonzero; smaller leading minors may vanish.
    ``method`` selects how the column-replaced determinants are evaluated
    (see :func:`partial_cramer.full.solve_full`).
    """
    return _affine_maps(sys.r, j, method, singular_rtol)


def partial_values(sys: SystemSpec, j: int, tail: Sequence[Scalar]) -> tuple:
    """Evaluate ``x_1..x_j`` literally as ``det R^(i)_[j x j](X'_[j] - X'_perp[j]) / D_j``.

    ``X'_[j]`` is taken from the system; ``tail`` supplies ``x_{j+1}..x_n``.
    No coefficient extraction is involved, which makes this a useful
    cross-check of :func:`solve_partial`.
    """
    _check_cut(sys.r, j)
    block = leading_submatrix(sys.r, j)
    d_j = det_fast(block)
    if d_j == 0:
        raise ZeroLeadingMinorError(j)
    rhs = sys.x_prime.head(j) - perp_contribution(sys.r, j).vector(tail, sys.kind)
    return tuple(det_fast(replace_column(block, i, rhs)) / d_j for i in range(1, j + 1))


@dataclass(frozen=True, slots=True)
class TraceStep:
    j: int
    d_j: Scalar
    solution: AffineSolution


@dataclass(frozen=True, slots=True)
class EliminationTrace:
    steps: tuple[TraceStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __getitem__(self, j: int) -> TraceStep:
        """1-based: ``trace[j]`` is the state after eliminating ``x_1..x_j``."""
        if not 1 <= j <= len(self.steps):
            raise IndexError(f"trace has steps 1..{len(self.steps)}, asked for {j}")
        return self.steps[j - 1]

    @property
    def final(self) -> AffineSolution:
        return self.steps[-1].solution


def eliminate_stepwise(sys: SystemSpec, *, singular_rtol: float = DEFAULT_SINGULAR_RTOL) -> EliminationTrace:
    """Eliminate ``x_1, x_2, ...`` one at a time, recording the maps after each step.

    Step ``j`` substitutes the current maps for ``x_1..x_{j-1}`` into
    equation ``j``. The coefficient left on ``x_j`` is ``D_j / D_{j-1}``, so
    every leading minor up to ``j`` must be nonzero. Solving for ``x_j`` and
    feeding it back into the earlier maps yields the maps for cut ``j``.
    """
    r, n, kind = sys.r, sys.n, sys.kind
    z = zero(kind)
    prime_rows: list[list[Scalar]] = []  # i-th row: coefficients of x'_1..x'_{j-1}
    tail_rows: list[list[Scalar]] = []  # i-th row: coefficients of x_j..x_n
    d_prev: Scalar = one(kind)
    steps: list[TraceStep] = []
    for j in range(1, n + 1):
        eq = r.row(j - 1)
        a = [sum((eq[k] * prime_rows[k][l] for k in range(j - 1)), z) for l in range(j - 1)]
        b = [eq[m] + sum((eq[k] * tail_rows[k][m - j + 1] for k in range(j - 1)), z) for m in range(j - 1, n)]
        pivot = b[0]
        d_j = d_prev * pivot
        if pivot == 0 or is_negligible(d_j, leading_submatrix(r, j), singular_rtol):
            raise ZeroLeadingMinorError(j, EliminationTrace(tuple(steps)))
        new_prime = [-c / pivot for c in a] + [one(kind) / pivot]
        new_tail = [-c / pivot for c in b[1:]]
        for i in range(j - 1):
            t = tail_rows[i][0]
            prime_rows[i] = prime_rows[i] + [z] if t == 0 else [p + t * q for p, q in zip(prime_rows[i] + [z], new_prime)]
            rest = tail_rows[i][1:]
            tail_rows[i] = rest if t == 0 else [p + t * q for p, q in zip(rest, new_tail)]
        prime_rows.append(new_prime)
        tail_rows.append(new_tail)
        prime = Matrix(j, j, tuple(v for row in prime_rows for v in row), kind)
        tail = Matrix(j, n - j, tuple(v for row in tail_rows for v in row), kind) if j < n else None
        steps.append(TraceStep(j, d_j, AffineSolution(j, n, d_j, prime, tail)))
        d_prev = d_j
    return EliminationTrace(tuple(steps))


def consistent_point(r: Matrix, p: int, primes: Sequence[Scalar], free: Sequence[Scalar]) -> tuple[ColumnVector, ColumnVector]:
    """Build ``(x, x')`` where ``x_1..x_{p-1}`` follow the cut-``(p-1)`` maps.

    ``primes`` gives all ``n`` primed values and ``free`` gives ``x_p..x_n``.
    """
    _check_cut(r, p)
    n, kind = r.rows, r.kind
    if len(primes) != n or len(free) != n - p + 1:
        raise DimensionError(f"need {n} primed values and {n - p + 1} free values")
    head: tuple = ()
    if p > 1:
        head = _affine_maps(r, p - 1, "elimination", DEFAULT_SINGULAR_RTOL).evaluate(list(primes[: p - 1]), list(free))
    return ColumnVector(n, tuple(head) + tuple(free), kind), ColumnVector(n, tuple(primes), kind)


def check_induction_identity(r: Matrix, p: int, x: ColumnVector, x_prime: ColumnVector, *, tol: float = 1e-9) -> tuple[Scalar, Scalar]:
    """Evaluate both sides of the step-``p`` induction identity.

    lhs = D_{p-1} * (x'_p - sum_k R_pk x_k)
    rhs = det R^(p)_[p x p](X'_[p] - X'_perp[p]) - D_p * x_p

    The point must already satisfy the cut-``(p-1)`` maps for
    ``x_1..x_{p-1}``; a :class:`ValueError` is raised otherwise.
    """
    _check_cut(r, p)
    n, kind = r.rows, r.kind
    if p < 2:
        raise DimensionError("the induction identity starts at p = 2")
    if x.dim != n or x_prime.dim != n:
        raise DimensionError(f"point vectors must have {n} entries")
    minors = leading_minors(r)
    for k in range(1, p):
        if minors[k] == 0:
            raise ZeroLeadingMinorError(k)
    prev = _affine_maps(r, p - 1, "elimination", DEFAULT_SINGULAR_RTOL)
    expected = prev.evaluate(list(x_prime.entries[: p - 1]), list(x.entries[p - 1:]))
    if not all(close(a, b, tol) for a, b in zip(expected, x.entries[: p - 1])):
        raise ValueError(f"x_1..x_{p - 1} do not satisfy the cut-{p - 1} maps at this point")

    row = r.row(p - 1)
    z = zero(kind)
    lhs = minors[p - 1] * (x_prime[p - 1] - sum((c * v for c, v in zip(row, x.entries)), z))
    block = leading_submatrix(r, p)
    rhs_col = x_prime.head(p) - perp_contribution(r, p).vector(list(x.entries[p:]), kind)
    rhs = det_fast(replace_column(block, p, rhs_col)) - minors[p] * x[p - 1]
    return lhs, rhs


def random_consistent_point(r: Matrix, p: int, rng: random.Random, bound: int = 20) -> tuple[ColumnVector, ColumnVector]:
    """Random ``(x, x')`` for :func:`check_induction_identity`.

    Rational values are ``a/b`` with ``|a| <= bound`` and ``1 <= b <= bound``;
    float values are uniform on ``[-bound, bound]``.
    """
    n = r.rows
    if r.kind is ScalarKind.FLOAT:
        draw = lambda: rng.uniform(-bound, bound)  # noqa: E731
    else:
        draw = lambda: Fraction(rng.randint(-bound, bound), rng.randint(1, bound))  # noqa: E731
    primes = [draw() for _ in range(n)]
    free = [draw() for _ in range(n - p + 1)]
    return consistent_point(r, p, primes, free)


def reorder_for_nonzero_minors(sys: SystemSpec, *, singular_rtol: float = DEFAULT_SINGULAR_RTOL) -> tuple[SystemSpec, tuple[int, ...]]:
    """Permute equations so that every leading minor is nonzero.

    Returns the permuted system and ``perm`` with ``perm[i-1]`` the original
    (1-based) label of the equation that now sits in row ``i``. Rationals
    take the first usable row in each column, so a system that already
    qualifies comes back unpermuted; floats pick the largest pivot.
    """
    r, n = sys.r, sys.n
    if is_negligible(det_fast(r), r, singular_rtol):
        raise SingularMatrixError("cannot reorder a singular system")
    a = r.to_rows()
    order = list(range(1, n + 1))
    for k in range(n):
        if sys.kind is ScalarKind.FLOAT:
            piv = max(range(k, n), key=lambda i: abs(a[i][k]))
        else:
            piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None or a[piv][k] == 0:
            raise SingularMatrixError("cannot reorder a singular system")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            order[k], order[piv] = order[piv], order[k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f != 0:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    perm = tuple(order)
    return sys.permuted(perm), perm
