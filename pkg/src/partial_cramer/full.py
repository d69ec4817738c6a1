"""Classical Cramer's rule: ``x_i = det R^(i)(X') / det R``."""

from __future__ import annotations

from dataclasses import dataclass

from .determinant import column_replacement_determinants, det_fast
from .errors import DimensionError, MixedScalarKindError, SingularMatrixError
from .matrix import ColumnVector, Matrix, SystemSpec, matvec, replace_column
from .scalars import Scalar, ScalarKind

DEFAULT_SINGULAR_RTOL = 1e-12

METHODS = ("elimination", "columns")


@dataclass(frozen=True, slots=True)
class FullSolution:
    x: ColumnVector
    det_r: Scalar

    def __post_init__(self) -> None:
        if self.det_r == 0:
            raise SingularMatrixError(det=self.det_r)


def singular_threshold(m: Matrix, rtol: float = DEFAULT_SINGULAR_RTOL) -> float:
    """Heuristic float cutoff ``rtol * max(1, max|entry|)**n``; zero for rationals."""
    if m.kind is ScalarKind.RATIONAL:
        return 0.0
    scale = max(1.0, max(abs(v) for v in m.entries))
    return rtol * scale ** m.rows


def is_negligible(value: Scalar, m: Matrix, rtol: float = DEFAULT_SINGULAR_RTOL) -> bool:
    if m.kind is ScalarKind.RATIONAL:
        return value == 0
    return abs(value) <= singular_threshold(m, rtol)


def solve_full(sys: SystemSpec, *, method: str = "elimination", singular_rtol: float = DEFAULT_SINGULAR_RTOL) -> FullSolution:
    """Solve every unknown as a ratio of determinants.

    ``method="elimination"`` gets ``det R`` and all ``n`` column-replaced
    determinants from one fraction-free Gauss-Jordan sweep (cubic cost).
    ``method="columns"`` builds each ``R^(i)(X')`` explicitly and evaluates
    ``n + 1`` separate determinants; it is the literal formula and is kept
    as a cross-check. Both raise :class:`SingularMatrixError` on a
    (numerically) vanishing ``det R``.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    r, xp = sys.r, sys.x_prime
    if method == "columns":
        det_r = det_fast(r)
        if is_negligible(det_r, r, singular_rtol):
            raise SingularMatrixError(f"det(R) = {det_r} is zero", det=det_r)
        x = tuple(det_fast(replace_column(r, i, xp)) / det_r for i in range(1, sys.n + 1))
        return FullSolution(ColumnVector(sys.n, x, sys.kind), det_r)

    res = column_replacement_determinants(r, [xp])
    if res.solutions is None or is_negligible(res.det, r, singular_rtol):
        raise SingularMatrixError(f"det(R) = {res.det} is zero", det=res.det)
    return FullSolution(ColumnVector(sys.n, res.solutions[0], sys.kind), res.det)


def residual(sys: SystemSpec, x: ColumnVector) -> ColumnVector:
    """``X' - R x``."""
    if x.dim != sys.n:
        raise DimensionError(f"candidate has {x.dim} entries, system has {sys.n} unknowns")
    if x.kind is not sys.kind:
        raise MixedScalarKindError("candidate and system use different scalar kinds")
    return sys.x_prime - matvec(sys.r, x)
