"""Classical Cramer's rule and its partial-variable generalization.

Exact (``fractions.Fraction``) and float arithmetic share one API. The
partial rule expresses the leading unknowns ``x_1..x_j`` of ``X' = R X``
as affine maps of ``x'_1..x'_j`` and the remaining ``x_{j+1}..x_n``.
"""

from .affine import AffineSolution
from .determinant import MinorSequence, column_replacement_determinants, det_fast, det_leibniz, leading_minors
from .errors import (
    DimensionError,
    LinearSystemError,
    MixedScalarKindError,
    SingularMatrixError,
    ZeroLeadingMinorError,
)
from .full import FullSolution, residual, solve_full
from .matrix import ColumnVector, Matrix, SystemSpec, identity, leading_submatrix, make_matrix, replace_column
from .models import ChainSpec, build_chain_system, chain_closed_form, chain_inverse_matrix, chain_matrix
from .oracle import OracleSolution, partial_solve_by_substitution, solve_elimination
from .partial import (
    EliminationTrace,
    PerpContribution,
    TraceStep,
    check_induction_identity,
    consistent_point,
    eliminate_stepwise,
    partial_values,
    perp_contribution,
    reorder_for_nonzero_minors,
    solve_partial,
)
from .scalars import ScalarKind

__all__ = [
    "AffineSolution",
    "ChainSpec",
    "ColumnVector",
    "DimensionError",
    "EliminationTrace",
    "FullSolution",
    "LinearSystemError",
    "Matrix",
    "MinorSequence",
    "MixedScalarKindError",
    "OracleSolution",
    "PerpContribution",
    "ScalarKind",
    "SingularMatrixError",
    "SystemSpec",
    "TraceStep",
    "ZeroLeadingMinorError",
    "build_chain_system",
    "chain_closed_form",
    "chain_inverse_matrix",
    "chain_matrix",
    "check_induction_identity",
    "column_replacement_determinants",
    "consistent_point",
    "det_fast",
    "det_leibniz",
    "eliminate_stepwise",
    "identity",
    "leading_minors",
    "leading_submatrix",
    "make_matrix",
    "partial_solve_by_substitution",
    "partial_values",
    "perp_contribution",
    "reorder_for_nonzero_minors",
    "replace_column",
    "residual",
    "solve_elimination",
    "solve_full",
    "solve_partial",
]
