"""Soft thresholding and the sparse / low-rank approximation problems it solves."""

from .dense_linalg import (SvdFactorization, as_matrix, diag_part, frobenius_norm, l1_norm,
                           matmul, nuclear_norm, svd, transpose)
from .errors import ConvergenceError, DimensionError, DomainError, ParseError, ShrinkageError
from .matrix_prox import nuclear_ball_nearest, svt
from .params import PenaltyParams
from .scalar_prox import hard_keep, scalar_objective, shrink
from .vector_prox import (BudgetSolve, ProxSolution, l0_approx, l1_ball_nearest,
                          soft_threshold, solve_budget_lambda)

__all__ = [
    "BudgetSolve", "ConvergenceError", "DimensionError", "DomainError", "ParseError",
    "PenaltyParams", "ProxSolution", "ShrinkageError", "SvdFactorization", "as_matrix",
    "diag_part", "frobenius_norm", "hard_keep", "l0_approx", "l1_ball_nearest", "l1_norm",
    "matmul", "nuclear_ball_nearest", "nuclear_norm", "scalar_objective", "shrink",
    "soft_threshold", "solve_budget_lambda", "svd", "svt", "transpose",
]
