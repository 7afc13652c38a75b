"""Entry-wise l0/l1 proximal maps and the exact l1-ball projection."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DimensionError, DomainError
from .params import positive
from .scalar_prox import keep_threshold

__all__ = [
    "BudgetSolve",
    "ProxSolution",
    "as_array",
    "soft_threshold",
    "l0_approx",
    "solve_budget_lambda",
    "l1_ball_nearest",
]


@dataclass(frozen=True)
class BudgetSolve:
    """Multiplier making the shrunken point meet an l1 budget.

    ``active`` is False when the input already satisfies the budget, in which
    case ``lambda_star`` is 0.
    """

    lambda_star: float
    achieved_l1: float
    active: bool


@dataclass(frozen=True)
class ProxSolution:
    """Solution of a proximal/projection problem with diagnostics.

    Spectral operators fill ``sigma_in``, ``sigma_out`` and ``rank_out``;
    entry-wise operators leave them empty / ``None``.
    """

    solution: np.ndarray
    objective: float
    effective_lambda: float
    sigma_in: np.ndarray = field(default_factory=lambda: np.zeros(0))
    sigma_out: np.ndarray = field(default_factory=lambda: np.zeros(0))
    rank_out: Optional[int] = None

    @property
    def cardinality_out(self) -> int:
        return int(np.count_nonzero(self.solution))


def as_array(v, name="v") -> np.ndarray:
    """Non-empty float64 copy of ``v`` with finite entries, any shape."""
    try:
        arr = np.array(v, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} is not a real array: {exc}") from None
    if arr.size == 0:
        raise DimensionError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} has non-finite entries")
    return arr


def soft_threshold(v, lam) -> np.ndarray:
    """Apply the shrinkage function entry-wise.

    With ``lam = 1/beta`` this minimizes ``||u||_1 + beta/2 * ||u - v||_2**2``
    for vectors and for matrices treated as vectors.
    """
    v = as_array(v)
    lam = positive("lambda", lam)
    return np.copysign(np.maximum(np.abs(v) - lam, 0.0), v) + 0.0


def l0_approx(v, beta) -> np.ndarray:
    """Minimize ``card(u) + beta/2 * ||u - v||_2**2`` entry-wise.

    Every output entry is either 0 or the input entry itself.
    """
    v = as_array(v)
    out = v.copy()
    out[np.abs(v) <= keep_threshold(beta)] = 0.0
    return out


def solve_budget_lambda(v, tau) -> BudgetSolve:
    """Find ``lam >= 0`` with ``sum(max(|v_i| - lam, 0)) == tau``.

    ``g(lam) = sum(max(|v_i| - lam, 0))`` is piecewise linear and decreasing
    with breakpoints at the magnitudes. Sorting them descending as
    ``m_1 >= m_2 >= ...`` with prefix sums ``c_k``, on the segment where
    exactly ``k`` entries survive ``g(lam) = c_k - k*lam``; the root is
    ``(c_k - tau) / k`` for the largest ``k`` with ``m_k > (c_k - tau) / k``.
    """
    v = as_array(v)
    tau = positive("tau", tau)
    mags = np.abs(v).ravel()
    total = float(np.sum(mags))
    if total <= tau:
        return BudgetSolve(lambda_star=0.0, achieved_l1=total, active=False)
    desc = np.sort(mags)[::-1]
    k = np.arange(1, desc.size + 1)
    candidates = (np.cumsum(desc) - tau) / k
    idx = np.flatnonzero(desc > candidates)[-1]
    lam = max(float(candidates[idx]), 0.0)
    achieved = float(np.sum(np.maximum(mags - lam, 0.0)))
    return BudgetSolve(lambda_star=lam, achieved_l1=achieved, active=True)


def l1_ball_nearest(v, tau) -> ProxSolution:
    """Euclidean projection of ``v`` onto ``{u : ||u||_1 <= tau}``.

    The projection is the soft threshold at the budget multiplier; inputs
    already inside the ball come back unchanged. ``objective`` is the
    distance ``||u - v||_2``.
    """
    v = as_array(v)
    budget = solve_budget_lambda(v, tau)
    if budget.active:
        u = np.copysign(np.maximum(np.abs(v) - budget.lambda_star, 0.0), v) + 0.0
    else:
        u = v.copy()
    dist = float(np.sqrt(np.sum((u - v) ** 2)))
    return ProxSolution(solution=u, objective=dist, effective_lambda=budget.lambda_star)
