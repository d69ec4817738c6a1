"""Scalar kinds: exact rationals (``fractions.Fraction``) and IEEE doubles.

Every matrix and vector carries one :class:`ScalarKind`. Integers are
accepted as input and become rationals unless a float kind is requested
explicitly. Mixing ``float`` with ``Fraction`` is rejected rather than
promoted, so exact computations never silently degrade.
"""

from __future__ import annotations

import enum
import math
import numbers
from fractions import Fraction
from typing import Iterable, Union

from .errors import MixedScalarKindError

Scalar = Union[Fraction, float]

DEFAULT_FLOAT_TOL = 1e-9


class ScalarKind(str, enum.Enum):
    RATIONAL = "rational"
    FLOAT = "float"

    @classmethod
    def parse(cls, value: "ScalarKind | str") -> "ScalarKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown scalar kind {value!r}; expected 'rational' or 'float'") from None


def kind_of(value: object) -> ScalarKind | None:
    """Kind a single raw value belongs to; ``None`` for plain integers (kind-neutral)."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, float):
        return ScalarKind.FLOAT
    if isinstance(value, Fraction):
        return ScalarKind.RATIONAL
    if isinstance(value, numbers.Integral):
        return None
    if isinstance(value, numbers.Rational):
        return ScalarKind.RATIONAL
    raise TypeError(f"unsupported scalar type {type(value).__name__}")


def infer_kind(values: Iterable[object], kind: ScalarKind | str | None = None) -> ScalarKind:
    """Determine the common kind of ``values``.

    An explicit ``kind`` wins for integers. Floats under an explicit
    rational kind (or fractions under float) are a mixing error.
    """
    seen: set[ScalarKind] = set()
    for v in values:
        k = kind_of(v)
        if k is not None:
            seen.add(k)
    if len(seen) > 1:
        raise MixedScalarKindError("rational and float entries cannot be mixed")
    if kind is not None:
        kind = ScalarKind.parse(kind)
        if seen and seen != {kind}:
            raise MixedScalarKindError(f"{seen.pop().value} entries given for a {kind.value} object")
        return kind
    return seen.pop() if seen else ScalarKind.RATIONAL


def coerce(value: object, kind: ScalarKind) -> Scalar:
    if kind is ScalarKind.FLOAT:
        if isinstance(value, Fraction):
            raise MixedScalarKindError("rational entry in a float object")
        return float(value)  # type: ignore[arg-type]
    if isinstance(value, float):
        raise MixedScalarKindError("float entry in a rational object")
    return Fraction(value)  # type: ignore[arg-type]


def convert(value: Scalar, kind: ScalarKind) -> Scalar:
    """Explicit cross-kind conversion (the only sanctioned way to change kind)."""
    if kind is ScalarKind.FLOAT:
        return float(value)
    return Fraction(value)


def zero(kind: ScalarKind) -> Scalar:
    return 0.0 if kind is ScalarKind.FLOAT else Fraction(0)


def one(kind: ScalarKind) -> Scalar:
    return 1.0 if kind is ScalarKind.FLOAT else Fraction(1)


def close(a: Scalar, b: Scalar, tol: float = DEFAULT_FLOAT_TOL) -> bool:
    """Strict equality for rationals, absolute-or-relative tolerance for floats."""
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(a, b, rel_tol=tol, abs_tol=tol)
    return a == b


def format_scalar(value: Scalar) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def parse_scalar(raw: object, kind: ScalarKind) -> Scalar:
    """Parse a file literal.

    Rational kind takes integers and ``"p/q"`` strings; non-integral bare
    numbers are refused so that binary floats never leak into exact input.
    Float kind takes any JSON number (and numeric strings such as ``"1e-3"``).
    """
    if isinstance(raw, bool):
        raise ValueError(f"boolean {raw!r} is not a number")
    if kind is ScalarKind.RATIONAL:
        if isinstance(raw, int):
            return Fraction(raw)
        if isinstance(raw, float):
            if raw.is_integer():
                return Fraction(int(raw))
            raise ValueError(f"non-integer number {raw!r} in rational mode; write it as a \"p/q\" string")
        if isinstance(raw, str):
            try:
                return Fraction(raw.strip())
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"invalid rational literal {raw!r}") from None
        raise ValueError(f"expected a number or \"p/q\" string, got {type(raw).__name__}")
    if isinstance(raw, (int, float)):
        return float(raw)
    if isinstance(raw, str):
        if "/" in raw:
            raise ValueError(f"rational literal {raw!r} requires scalar kind \"rational\"")
        try:
            return float(raw)
        except ValueError:
            raise ValueError(f"invalid float literal {raw!r}") from None
    raise ValueError(f"expected a number, got {type(raw).__name__}")


def to_json_value(value: Scalar) -> int | float | str:
    if isinstance(value, float):
        return value
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"
