"""Brute-force verifiers for the closed-form operators.

Nothing here calls the operators under test. Objectives are evaluated
entry-wise, and where a spectral quantity is needed the reference singular
values come from LAPACK (``numpy.linalg.svd``) rather than the package's own
Jacobi SVD, so each check is an independent second route to the answer.

Random draws go through :func:`make_rng`: numpy's PCG64 keyed by a
``SeedSequence(seed, spawn_key=(stream,))``, so a seed plus a stream index
fully determines every sample.
"""

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import ConvergenceError, DimensionError, DomainError

__all__ = [
    "OracleReport",
    "make_rng",
    "three_case_shrink",
    "grid_min_scalar",
    "support_enum_l0",
    "coordinate_grid_check",
    "perturbation_check",
    "spectral_family_check",
    "nuclear_ball_check",
    "bisect_budget_lambda",
    "symmetric_eigs_jacobi",
    "random_orthogonal",
    "merge_reports",
]

SCALAR_TOL = 1e-12
SPECTRAL_TOL = 1e-9
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OracleReport:
    """Outcome of one oracle run.

    ``margin`` is ``best_competitor_objective - candidate_objective``; the
    candidate passes when ``margin >= -tolerance``.
    """

    candidate_objective: float
    best_competitor_objective: float
    margin: float
    competitors_tested: int
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.margin >= -self.tolerance)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict:
        out = asdict(self)
        out["verdict"] = self.verdict
        return out


def _report(candidate_obj, competitor_objs, tolerance):
    competitor_objs = np.asarray(competitor_objs, dtype=float).ravel()
    best = float(np.min(competitor_objs)) if competitor_objs.size else math.inf
    if not math.isfinite(candidate_obj):
        margin = -math.inf
    elif math.isinf(best):
        margin = math.inf
    else:
        margin = best - candidate_obj
    return OracleReport(
        candidate_objective=float(candidate_obj),
        best_competitor_objective=best,
        margin=float(margin),
        competitors_tested=int(competitor_objs.size),
        tolerance=float(tolerance),
    )


def merge_reports(*reports) -> OracleReport:
    """Combine reports on the same candidate: worst margin wins, counts add."""
    worst = min(reports, key=lambda r: r.margin)
    return OracleReport(
        candidate_objective=worst.candidate_objective,
        best_competitor_objective=worst.best_competitor_objective,
        margin=worst.margin,
        competitors_tested=sum(r.competitors_tested for r in reports),
        tolerance=max(r.tolerance for r in reports),
    )


def make_rng(seed=0, stream=0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream,))))


# ---------------------------------------------------------------------------
# scalar problem

def three_case_shrink(a, lam):
    """Shrinkage written as its three explicit cases."""
    if a > lam:
        return a - lam
    if a < -lam:
        return a + lam
    return 0.0


def _golden_section(f, lo, hi, width=1e-12):
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > width:
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = f(d)
        if c >= d:
            break
    return (lo + hi) / 2.0


def grid_min_scalar(a, lam, span=None, steps=10**6):
    """Minimize ``lam*|x| + (x - a)**2 / 2`` by exhaustive grid plus refinement.

    The grid has ``steps`` points on ``[a - span, a + span]``; a golden-section
    search then narrows the bracket around the best grid point to width 1e-12.
    ``span`` defaults to ``3*lam + |a| + 1``.
    """
    if steps < 1000:
        raise DomainError("grid_min_scalar needs steps >= 1000")
    if span is None:
        span = 3.0 * lam + abs(a) + 1.0

    def f(x):
        return lam * np.abs(x) + 0.5 * (x - a) ** 2

    xs = np.linspace(a - span, a + span, steps)
    i = int(np.argmin(f(xs)))
    lo, hi = xs[max(i - 1, 0)], xs[min(i + 1, steps - 1)]
    x = _golden_section(lambda t: float(f(t)), float(lo), float(hi))
    # the kink at 0 is the minimizer for a whole interval of a; keep it if it wins
    if lo <= 0.0 <= hi and f(0.0) <= f(x):
        x = 0.0
    return float(x)


# ---------------------------------------------------------------------------
# entry-wise problems

def support_enum_l0(v, beta, candidate, tolerance=SCALAR_TOL) -> OracleReport:
    """Compare ``candidate`` against every support pattern for the l0 problem.

    On a fixed support the best choice is ``u = v`` there and 0 elsewhere, so
    the ``2**n`` patterns exhaust all minimizer candidates. Objective:
    ``card(u) + beta/2 * ||u - v||**2``.
    """
    v = np.asarray(v, dtype=float).ravel()
    candidate = np.asarray(candidate, dtype=float).ravel()
    n = v.size
    if n > 20:
        raise DimensionError(f"support enumeration limited to 20 entries, got {n}")
    if candidate.size != n:
        raise DimensionError("candidate and v differ in size")
    masks = ((np.arange(2**n)[:, None] >> np.arange(n)) & 1).astype(bool)
    objs = masks.sum(axis=1) + 0.5 * beta * np.where(masks, 0.0, v * v).sum(axis=1)
    cand = np.count_nonzero(candidate) + 0.5 * beta * float(np.sum((candidate - v) ** 2))
    return _report(cand, objs, tolerance)


def coordinate_grid_check(candidate, v, l1_weight=1.0, quad_weight=1.0,
                          step=1e-3, refine=1e-6, tolerance=SCALAR_TOL) -> OracleReport:
    """Per-coordinate grid search for ``l1_weight*|u| + quad_weight/2*(u - v)**2``.

    Each coordinate is scanned on ``[min(0, v_i) - 10*step, max(0, v_i) + 10*step]``
    (the minimizer lies between 0 and ``v_i``) at ``step``, then at ``refine``
    around the winner. The per-coordinate winners form one competitor vector,
    reported together with the grid points themselves.
    """
    v = np.asarray(v, dtype=float).ravel()
    candidate = np.asarray(candidate, dtype=float).ravel()

    def f(u, vi):
        return l1_weight * np.abs(u) + 0.5 * quad_weight * (u - vi) ** 2

    best = np.empty_like(v)
    tested = 0
    for i, vi in enumerate(v):
        lo, hi = min(0.0, vi) - 10 * step, max(0.0, vi) + 10 * step
        xs = np.arange(lo, hi + step, step)
        x0 = xs[np.argmin(f(xs, vi))]
        fine = np.arange(x0 - step, x0 + step + refine, refine)
        fine = np.append(fine, 0.0)
        best[i] = fine[np.argmin(f(fine, vi))]
        tested += xs.size + fine.size
    cand = float(np.sum(f(candidate, v)))
    comp = float(np.sum(f(best, v)))
    rep = _report(cand, [comp], tolerance)
    return OracleReport(rep.candidate_objective, rep.best_competitor_objective,
                        rep.margin, tested, rep.tolerance)


def l1_objective(l1_weight, quad_weight, v):
    """Batched ``l1_weight*||u||_1 + quad_weight/2*||u - v||^2`` over a stack."""
    v = np.asarray(v, dtype=float)
    axes = tuple(range(-v.ndim, 0))

    def objective(stack):
        return (l1_weight * np.sum(np.abs(stack), axis=axes)
                + 0.5 * quad_weight * np.sum((stack - v) ** 2, axis=axes))

    return objective


def perturbation_check(candidate, objective, trials=1000, radius=0.1, seed=0,
                       tolerance=SCALAR_TOL, feasible=None, feasible_trials=0,
                       stream=0) -> OracleReport:
    """Random local search around ``candidate``.

    Parameters
    ----------
    candidate : ndarray
    objective : callable
        Maps a stack of points, shape ``(k,) + candidate.shape``, to ``k``
        objective values. Constrained problems return ``inf`` for infeasible
        points.
    trials : int
        Number of perturbations ``candidate + d`` with ``d`` in a uniformly
        random direction and ``||d||_F = radius * U(0, 1]``. Must be >= 100.
    feasible : callable, optional
        ``feasible(rng, count)`` returning a stack of feasible points, drawn
        ``feasible_trials`` times in addition to the perturbations.
    """
    if trials < 100:
        raise DomainError("perturbation_check needs trials >= 100")
    candidate = np.asarray(candidate, dtype=float)
    rng = make_rng(seed, stream)
    objs = [objective(_perturbations(rng, candidate, trials, radius))]
    if feasible is not None and feasible_trials:
        objs.append(objective(feasible(rng, feasible_trials)))
    cand = float(objective(candidate[None])[0])
    return _report(cand, np.concatenate(objs), tolerance)


def _perturbations(rng, candidate, trials, radius):
    g = rng.standard_normal((trials,) + candidate.shape)
    axes = tuple(range(1, g.ndim))
    g /= np.sqrt(np.sum(g * g, axis=axes, keepdims=True))
    r = radius * (1.0 - rng.random(trials))
    g *= r.reshape((trials,) + (1,) * candidate.ndim)
    return candidate[None] + g


# ---------------------------------------------------------------------------
# spectral problems

def _ref_svd(a):
    return np.linalg.svd(np.asarray(a, dtype=float), full_matrices=False)


def svt_objective(a, beta):
    """Batched ``||X||_* + beta/2 * ||X - A||_F**2`` with LAPACK singular values."""
    a = np.asarray(a, dtype=float)

    def objective(stack):
        nuc = np.sum(np.linalg.svd(stack, compute_uv=False), axis=-1)
        return nuc + 0.5 * beta * np.sum((stack - a) ** 2, axis=(-2, -1))

    return objective


def spectral_family_check(candidate, a, beta, values=1000, tolerance=SPECTRAL_TOL,
                          objective=None) -> OracleReport:
    """Compare against ``U diag(S_mu(sigma)) V^T`` for ``values`` thresholds
    ``mu`` spread evenly over ``[0, 2*sigma_1]``."""
    a = np.asarray(a, dtype=float)
    u, s, vt = _ref_svd(a)
    objective = objective or svt_objective(a, beta)
    mus = np.linspace(0.0, 2.0 * max(s[0], 1e-300), values)
    shrunk = np.maximum(s[None, :] - mus[:, None], 0.0)
    stack = np.einsum("ik,jk,kl->jil", u, shrunk, vt)
    cand = float(objective(np.asarray(candidate, dtype=float)[None])[0])
    return _report(cand, objective(stack), tolerance)


def bisect_budget_lambda(v, tau, iterations=200):
    """Root of ``sum(max(|v_i| - lam, 0)) = tau`` by bisection on ``[0, max|v|]``.

    Returns 0 when the budget is already met. The upper end of the final
    bracket is returned, so the shrunken vector never exceeds the budget
    by more than rounding.
    """
    mags = np.abs(np.asarray(v, dtype=float)).ravel()
    if np.sum(mags) <= tau:
        return 0.0
    lo, hi = 0.0, float(mags.max())
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if np.sum(np.maximum(mags - mid, 0.0)) > tau:
            lo = mid
        else:
            hi = mid
    return hi


def random_orthogonal(rng, n):
    """Haar-distributed orthogonal ``n x n`` matrix (QR with sign fix)."""
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.where(np.diag(r) < 0, -1.0, 1.0)


def nuclear_ball_check(candidate, a, tau, competitors=1000, rotated=100,
                       perturbations=1000, radius=0.1, seed=0,
                       tolerance=SPECTRAL_TOL) -> OracleReport:
    """Feasible-competitor search for ``min ||X - A||_F s.t. ||X||_* <= tau``.

    Competitors are

    * ``U diag(s) V^T`` with the singular vectors of ``A`` and random
      ``s >= 0``, ``sum(s) <= tau``;
    * ``U' diag(s') V'^T`` with randomly tilted orthogonal factors and ``s'``
      the singular values of ``A`` shrunk onto the budget by bisection;
    * random perturbations of the candidate, counted only when feasible.

    Feasibility is judged by LAPACK singular values. The candidate may exceed
    the budget by ``1e-9 * max(1, tau)`` (otherwise it fails outright);
    competitors get no slack, since any slack is distance they could buy.
    """
    if perturbations < 100:
        raise DomainError("nuclear_ball_check needs perturbations >= 100")
    a = np.asarray(a, dtype=float)
    candidate = np.asarray(candidate, dtype=float)
    u, s, vt = _ref_svd(a)
    k = s.size

    def nuclear(stack):
        return np.sum(np.linalg.svd(stack, compute_uv=False), axis=-1)

    def distance(stack):
        return np.sqrt(np.sum((stack - a) ** 2, axis=(-2, -1)))

    rng = make_rng(seed)
    lam = bisect_budget_lambda(s, tau)
    s_budget = np.maximum(s - lam, 0.0)

    w = rng.dirichlet(np.ones(k), size=competitors) * tau * (1.0 - rng.random((competitors, 1)))
    pool = [np.einsum("ik,jk,kl->jil", u, w, vt)]
    for _ in range(rotated):
        uq, ur = np.linalg.qr(u + 0.1 * rng.standard_normal(u.shape))
        vq, vr = np.linalg.qr(vt.T + 0.1 * rng.standard_normal(vt.T.shape))
        uq = uq * np.where(np.diag(ur) < 0, -1.0, 1.0)
        vq = vq * np.where(np.diag(vr) < 0, -1.0, 1.0)
        pool.append(((uq * s_budget) @ vq.T)[None])
    pool.append(_perturbations(rng, candidate, perturbations, radius))
    pool = np.concatenate(pool)
    objs = np.where(nuclear(pool) <= tau, distance(pool), np.inf)

    cand_feasible = nuclear(candidate[None])[0] <= tau + SPECTRAL_TOL * max(1.0, tau)
    cand = float(distance(candidate[None])[0]) if cand_feasible else math.inf
    return _report(cand, objs, tolerance)


# ---------------------------------------------------------------------------
# eigenvalues, for cross-checking singular values

def _pairings(n):
    order = list(range(n + (n % 2)))
    rounds = []
    for _ in range(len(order) - 1):
        half = len(order) // 2
        pairs = [(order[i], order[-1 - i]) for i in range(half)]
        pairs = [(min(x, y), max(x, y)) for x, y in pairs if x < n and y < n]
        rounds.append((np.array([p for p, _ in pairs], dtype=np.intp),
                       np.array([q for _, q in pairs], dtype=np.intp)))
        order = order[:1] + order[-1:] + order[1:-1]
    return rounds


def symmetric_eigs_jacobi(s, max_sweeps=100):
    """Eigenvalues of a symmetric matrix by two-sided Jacobi, descending.

    Disjoint pivot pairs are annihilated together, one round-robin round
    per similarity transform ``J^T S J``. Symmetry is required within
    ``1e-12 * max(1, max|s_ij|)`` per entry.
    """
    s = np.array(s, dtype=float)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {s.shape}")
    scale = max(1.0, float(np.max(np.abs(s))))
    if np.max(np.abs(s - s.T)) > 1e-12 * scale:
        raise DomainError("matrix is not symmetric")
    a = 0.5 * (s + s.T)
    n = a.shape[0]
    if n == 1:
        return [float(a[0, 0])]
    floor = np.finfo(float).eps * np.sqrt(np.sum(a * a))
    rounds = _pairings(n)
    for _ in range(max_sweeps):
        rotated = False
        for p, q in rounds:
            apq = a[p, q]
            act = np.abs(apq) > floor
            if not act.any():
                continue
            rotated = True
            p, q, apq = p[act], q[act], apq[act]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.where(theta >= 0.0, 1.0, -1.0) / (np.abs(theta) + np.hypot(1.0, theta))
            c = 1.0 / np.sqrt(1.0 + t * t)
            sn = c * t
            j = np.eye(n)
            j[p, p] = c
            j[q, q] = c
            j[p, q] = sn
            j[q, p] = -sn
            a = j.T @ a @ j
            a = 0.5 * (a + a.T)
        if not rotated:
            return sorted(np.diag(a).tolist(), reverse=True)
    off = float(np.sqrt(np.sum(a * a) - np.sum(np.diag(a) ** 2)))
    raise ConvergenceError("symmetric Jacobi did not converge", residual=off, sweeps=max_sweeps)
