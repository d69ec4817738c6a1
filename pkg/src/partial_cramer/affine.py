"""Affine solution maps for a leading block of unknowns.

For a cut ``j`` the maps read

    x_i = sum_l P[i, l] * x'_l  +  sum_{k>j} T[i, k] * x_k      (i = 1..j)

``P`` (``prime_coeffs``) is ``j x j``; ``T`` (``tail_coeffs``) is
``j x (n - j)`` and absent when ``j == n``. This module holds only the
data type, evaluation, printing and JSON round-tripping; it imports no
solver code so that both the determinant-based solvers and the
elimination oracle can produce it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .errors import DimensionError, MixedScalarKindError
from .matrix import Matrix
from .scalars import Scalar, ScalarKind, close, format_scalar, parse_scalar, to_json_value, zero

MIDDLE_DOT = "·"


@dataclass(frozen=True, slots=True)
class AffineSolution:
    j: int
    n: int
    d_j: Scalar
    prime_coeffs: Matrix
    tail_coeffs: Matrix | None

    def __post_init__(self) -> None:
        if not 1 <= self.j <= self.n:
            raise DimensionError(f"cut j={self.j} outside 1..{self.n}")
        if self.d_j == 0:
            raise ValueError("affine solution requires a nonzero leading minor")
        if (self.prime_coeffs.rows, self.prime_coeffs.cols) != (self.j, self.j):
            raise DimensionError(f"prime coefficients must be {self.j}x{self.j}")
        if self.j == self.n:
            if self.tail_coeffs is not None:
                raise DimensionError("a full solve has no tail coefficients")
        else:
            if self.tail_coeffs is None or (self.tail_coeffs.rows, self.tail_coeffs.cols) != (self.j, self.n - self.j):
                raise DimensionError(f"tail coefficients must be {self.j}x{self.n - self.j}")
            if self.tail_coeffs.kind is not self.prime_coeffs.kind:
                raise MixedScalarKindError("prime and tail coefficients use different scalar kinds")

    @property
    def kind(self) -> ScalarKind:
        return self.prime_coeffs.kind

    def prime_row(self, i: int) -> tuple:
        """Coefficients of ``x'_1..x'_j`` in the map for ``x_i`` (1-based ``i``)."""
        return self.prime_coeffs.row(i - 1)

    def tail_row(self, i: int) -> tuple:
        """Coefficients of ``x_{j+1}..x_n`` in the map for ``x_i``; empty when ``j == n``."""
        if self.tail_coeffs is None:
            return ()
        return self.tail_coeffs.row(i - 1)

    def evaluate(self, primes: Sequence[Scalar], tail: Sequence[Scalar] = ()) -> tuple:
        """Values of ``x_1..x_j`` for given ``x'_1..x'_j`` and ``x_{j+1}..x_n``."""
        if len(primes) != self.j or len(tail) != self.n - self.j:
            raise DimensionError(
                f"need {self.j} primed values and {self.n - self.j} tail values, got {len(primes)} and {len(tail)}"
            )
        z = zero(self.kind)
        out = []
        for i in range(1, self.j + 1):
            v = sum((c * p for c, p in zip(self.prime_row(i), primes)), z)
            v = sum((c * t for c, t in zip(self.tail_row(i), tail)), v)
            out.append(v)
        return tuple(out)

    def matches(self, other: "AffineSolution", tol: float | None = None) -> bool:
        """Coefficient-by-coefficient equality (exact unless ``tol`` is given)."""
        if (self.j, self.n) != (other.j, other.n):
            return False
        pairs = [(self.d_j, other.d_j)]
        pairs += list(zip(self.prime_coeffs.entries, other.prime_coeffs.entries))
        if self.tail_coeffs is not None and other.tail_coeffs is not None:
            pairs += list(zip(self.tail_coeffs.entries, other.tail_coeffs.entries))
        if tol is None:
            return all(a == b for a, b in pairs)
        return all(close(a, b, tol) for a, b in pairs)

    def expression(self, i: int) -> str:
        terms = [(c, f"x'{l}") for l, c in enumerate(self.prime_row(i), start=1)]
        terms += [(c, f"x{k}") for k, c in enumerate(self.tail_row(i), start=self.j + 1)]
        return f"x{i} = {format_affine(terms)}"

    def expressions(self) -> list[str]:
        return [self.expression(i) for i in range(1, self.j + 1)]

    def to_json(self) -> dict[str, Any]:
        return {
            "j": self.j,
            "n": self.n,
            "scalar": self.kind.value,
            "d_j": to_json_value(self.d_j),
            "prime_coeffs": [[to_json_value(v) for v in row] for row in self.prime_coeffs],
            "tail_coeffs": [] if self.tail_coeffs is None else [[to_json_value(v) for v in row] for row in self.tail_coeffs],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "AffineSolution":
        kind = ScalarKind.parse(data["scalar"])
        j, n = int(data["j"]), int(data["n"])
        prime = Matrix.from_rows([[parse_scalar(v, kind) for v in row] for row in data["prime_coeffs"]], kind)
        tail = None
        if j < n:
            tail = Matrix.from_rows([[parse_scalar(v, kind) for v in row] for row in data["tail_coeffs"]], kind)
        return cls(j, n, parse_scalar(data["d_j"], kind), prime, tail)


def format_affine(terms: Sequence[tuple[Scalar, str]]) -> str:
    """Render ``c1·v1 + c2·v2 - ...`` with explicit signs; zero terms are dropped."""
    parts: list[str] = []
    for coeff, name in terms:
        if coeff == 0:
            continue
        negative = coeff < 0
        body = f"{format_scalar(-coeff if negative else coeff)}{MIDDLE_DOT}{name}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts) if parts else "0"
