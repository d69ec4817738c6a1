"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

from typing import Any


class LinearSystemError(Exception):
    """Base class for all errors raised by partial_cramer."""


class DimensionError(LinearSystemError, ValueError):
    """Shapes or indices do not fit together."""


class MixedScalarKindError(LinearSystemError, TypeError):
    """Rational and float scalars were combined in one object."""


class SingularMatrixError(LinearSystemError, ArithmeticError):
    """The coefficient matrix has (numerically) zero determinant."""

    def __init__(self, message: str = "matrix is singular", det: Any = None):
        super().__init__(message)
        self.det = det


class ZeroLeadingMinorError(LinearSystemError, ArithmeticError):
    """A leading principal minor D_j vanishes.

    ``j`` is 1-based. ``partial_trace`` is set by stepwise elimination and
    holds the steps completed before the failure.
    """

    def __init__(self, j: int, partial_trace: Any = None, message: str | None = None):
        if message is None:
            message = f"leading minor D{j} is zero; try reordering the equations (--reorder)"
        super().__init__(message)
        self.j = j
        self.partial_trace = partial_trace
