"""Physical model builders.

The chain model: ``n`` blocks pulled in a line with common acceleration
``a``. Newton's law for block ``i`` is ``m_i a = T_i - T_{i+1}`` (with
``T_{n+1} = 0``), so ``R`` is upper bidiagonal with ``1`` on the diagonal
and ``-1`` above it, the right-hand side is ``m_i a`` and the unknowns are
the rope tensions ``T_i``. Units are not enforced.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError
from .matrix import ColumnVector, Matrix, SystemSpec
from .scalars import Scalar, ScalarKind, coerce, infer_kind, one, zero


@dataclass(frozen=True, slots=True)
class ChainSpec:
    masses: tuple
    acceleration: Scalar
    kind: ScalarKind = ScalarKind.RATIONAL

    def __post_init__(self) -> None:
        if not self.masses:
            raise ValueError("chain needs at least one mass")
        if any(m <= 0 for m in self.masses):
            raise ValueError("all masses must be positive")

    @classmethod
    def of(cls, masses: Sequence[object], acceleration: object, kind: ScalarKind | str | None = None) -> "ChainSpec":
        k = infer_kind(list(masses) + [acceleration], kind)
        return cls(tuple(coerce(m, k) for m in masses), coerce(acceleration, k), k)

    @property
    def n(self) -> int:
        return len(self.masses)


def chain_matrix(n: int, kind: ScalarKind | str = ScalarKind.RATIONAL) -> Matrix:
    if n < 1:
        raise DimensionError("chain needs at least one block")
    kind = ScalarKind.parse(kind)
    o, z = one(kind), zero(kind)
    entries = []
    for i in range(n):
        for k in range(n):
            entries.append(o if k == i else -o if k == i + 1 else z)
    return Matrix(n, n, tuple(entries), kind)


def build_chain_system(spec: ChainSpec) -> SystemSpec:
    rhs = tuple(m * spec.acceleration for m in spec.masses)
    return SystemSpec(chain_matrix(spec.n, spec.kind), ColumnVector(spec.n, rhs, spec.kind))


def chain_closed_form(spec: ChainSpec) -> ColumnVector:
    """``T_i = (m_i + ... + m_n) * a``, accumulated from the last block."""
    suffix = zero(spec.kind)
    out = []
    for m in reversed(spec.masses):
        suffix = suffix + m
        out.append(suffix * spec.acceleration)
    return ColumnVector(spec.n, tuple(reversed(out)), spec.kind)


def chain_inverse_matrix(n: int, kind: ScalarKind | str = ScalarKind.RATIONAL) -> Matrix:
    """Upper-triangular all-ones matrix, the inverse of :func:`chain_matrix`."""
    if n < 1:
        raise DimensionError("chain needs at least one block")
    kind = ScalarKind.parse(kind)
    o, z = one(kind), zero(kind)
    return Matrix(n, n, tuple(o if k >= i else z for i in range(n) for k in range(n)), kind)


def banded_system(
    n: int,
    lower: int,
    upper: int,
    rng: random.Random,
    *,
    kind: ScalarKind | str = ScalarKind.RATIONAL,
    low: int = -9,
    high: int = 9,
) -> SystemSpec:
    """Random system whose matrix is zero outside ``lower`` sub- and ``upper`` superdiagonals.

    The diagonal is drawn from ``1..high`` so triangular cases
    (``lower == 0`` or ``upper == 0``) are always nonsingular. Entries are
    integers; ``kind`` only selects their representation.
    """
    if n < 1 or lower < 0 or upper < 0:
        raise DimensionError("banded system needs n >= 1 and nonnegative bandwidths")
    kind = ScalarKind.parse(kind)
    entries = []
    for i in range(n):
        for k in range(n):
            if k == i:
                v = rng.randint(1, high)
            elif -lower <= k - i <= upper:
                v = rng.randint(low, high)
            else:
                v = 0
            entries.append(coerce(v, kind))
    rhs = tuple(coerce(rng.randint(low, high), kind) for _ in range(n))
    return SystemSpec(Matrix(n, n, tuple(entries), kind), ColumnVector(n, rhs, kind))
