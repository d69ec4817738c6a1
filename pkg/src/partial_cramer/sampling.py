"""Seeded random systems for tests and the identity checker.

Numerators are uniform on ``[low, high]`` (default ``[-9, 9]``); with
``max_den > 1`` denominators are drawn from ``[1, max_den]``.
Singular draws are rejected and redrawn.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .determinant import det_fast, leading_minors
from .matrix import ColumnVector, Matrix, SystemSpec
from .scalars import ScalarKind

DEFAULT_SEED = 20200101


def _entry(rng: random.Random, low: int, high: int, max_den: int) -> Fraction:
    return Fraction(rng.randint(low, high), rng.randint(1, max_den))


def random_integer_matrix(n: int, rng: random.Random, low: int = -9, high: int = 9) -> Matrix:
    return Matrix(n, n, tuple(Fraction(rng.randint(low, high)) for _ in range(n * n)), ScalarKind.RATIONAL)


def random_rational_matrix(n: int, rng: random.Random, low: int = -9, high: int = 9, max_den: int = 1) -> Matrix:
    return Matrix(n, n, tuple(_entry(rng, low, high, max_den) for _ in range(n * n)), ScalarKind.RATIONAL)


def random_rational_system(
    n: int,
    rng: random.Random,
    *,
    nonzero_minors: bool = False,
    low: int = -9,
    high: int = 9,
    max_den: int = 1,
    max_tries: int = 10_000,
) -> SystemSpec:
    """Nonsingular rational system; optionally with every leading minor nonzero."""
    for _ in range(max_tries):
        r = random_rational_matrix(n, rng, low, high, max_den)
        if nonzero_minors:
            if leading_minors(r).first_zero() is not None:
                continue
        elif det_fast(r) == 0:
            continue
        rhs = ColumnVector(n, tuple(_entry(rng, low, high, max_den) for _ in range(n)), ScalarKind.RATIONAL)
        return SystemSpec(r, rhs)
    raise RuntimeError(f"no admissible {n}x{n} system after {max_tries} draws")


def random_float_system(n: int, rng: random.Random, *, min_abs_det: float = 1e-6, max_tries: int = 10_000) -> SystemSpec:
    """Float system with entries uniform on ``[-1, 1]`` and ``|det R| > min_abs_det``."""
    for _ in range(max_tries):
        r = Matrix(n, n, tuple(rng.uniform(-1.0, 1.0) for _ in range(n * n)), ScalarKind.FLOAT)
        if abs(det_fast(r)) > min_abs_det:
            rhs = ColumnVector(n, tuple(rng.uniform(-1.0, 1.0) for _ in range(n)), ScalarKind.FLOAT)
            return SystemSpec(r, rhs)
    raise RuntimeError(f"no admissible {n}x{n} float system after {max_tries} draws")


def random_fraction(rng: random.Random, bound: int = 20) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_positive_fraction(rng: random.Random, bound: int = 20) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))
