"""Spectral operators: singular value thresholding and nuclear-ball projection.

Both reduce to a problem on the singular values alone, solved with the same
singular vectors as the input.
"""

import numpy as np

from .dense_linalg import as_matrix, svd
from .params import positive
from .vector_prox import ProxSolution, solve_budget_lambda

__all__ = ["svt", "nuclear_ball_nearest", "numerical_rank"]

RANK_RTOL = 1e-10


def numerical_rank(sigma_out, sigma_in) -> int:
    """Count ``sigma_out`` entries above ``1e-10 * max(1, sigma_in[0])``."""
    top = float(sigma_in[0]) if len(sigma_in) else 0.0
    return int(np.count_nonzero(np.asarray(sigma_out) > RANK_RTOL * max(1.0, top)))


def _assemble(fac, sigma_out):
    # +0.0 turns any -0.0 into 0.0 so written output never shows "-0".
    return (fac.u * sigma_out) @ fac.v.T + 0.0


def svt(a, beta) -> ProxSolution:
    """Minimize ``||X||_* + beta/2 * ||X - A||_F**2``.

    The minimizer keeps the singular vectors of ``A`` and soft-thresholds its
    singular values by ``1/beta``.

    Parameters
    ----------
    a : array_like, shape (m, n)
    beta : float
        Balancing weight, ``beta > 0``.

    Returns
    -------
    ProxSolution
        ``objective`` uses the entry-wise Frobenius norm for the fit term and
        ``sum(sigma_out)`` for the nuclear norm.
    """
    a = as_matrix(a)
    beta = positive("beta", beta)
    lam = 1.0 / beta
    fac = svd(a)
    sigma_out = np.maximum(fac.sigma - lam, 0.0)
    x = _assemble(fac, sigma_out)
    fit = float(np.sum((x - a) ** 2))
    objective = float(np.sum(sigma_out)) + 0.5 * beta * fit
    return ProxSolution(
        solution=x,
        objective=objective,
        effective_lambda=lam,
        sigma_in=fac.sigma,
        sigma_out=sigma_out,
        rank_out=numerical_rank(sigma_out, fac.sigma),
    )


def nuclear_ball_nearest(a, tau) -> ProxSolution:
    """Nearest matrix to ``A`` in Frobenius norm with ``||X||_* <= tau``.

    The singular values are projected onto the l1 ball of radius ``tau``
    by an exact threshold solve. When ``||A||_* <= tau`` the input is returned
    unchanged with ``effective_lambda = 0``. ``objective`` is ``||X - A||_F``.
    """
    a = as_matrix(a)
    tau = positive("tau", tau)
    fac = svd(a)
    budget = solve_budget_lambda(fac.sigma, tau)
    if not budget.active:
        return ProxSolution(
            solution=a.copy(),
            objective=0.0,
            effective_lambda=0.0,
            sigma_in=fac.sigma,
            sigma_out=fac.sigma.copy(),
            rank_out=numerical_rank(fac.sigma, fac.sigma),
        )
    sigma_out = np.maximum(fac.sigma - budget.lambda_star, 0.0)
    x = _assemble(fac, sigma_out)
    return ProxSolution(
        solution=x,
        objective=float(np.sqrt(np.sum((x - a) ** 2))),
        effective_lambda=budget.lambda_star,
        sigma_in=fac.sigma,
        sigma_out=sigma_out,
        rank_out=numerical_rank(sigma_out, fac.sigma),
    )
