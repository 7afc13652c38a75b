"""Dense real matrices, their norms, and a one-sided Jacobi SVD.

Matrices are plain 2-D ``float64`` numpy arrays; :func:`as_matrix` is the
gatekeeper that enforces shape and finiteness.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DimensionError, DomainError

__all__ = [
    "SvdFactorization",
    "as_matrix",
    "svd",
    "frobenius_norm",
    "nuclear_norm",
    "l1_norm",
    "diag_part",
    "matmul",
    "transpose",
]

# Column pairs whose normalized inner product is below this are orthogonal.
ORTHO_TOL = 1e-14
MAX_SWEEPS = 60
_EPS = np.finfo(np.float64).eps


def as_matrix(a, name="matrix") -> np.ndarray:
    """Validate ``a`` as a non-empty 2-D array of finite reals.

    Returns a fresh ``float64`` array; the caller's object is never aliased.
    """
    try:
        arr = np.array(a, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} is not a real matrix: {exc}") from None
    if arr.ndim != 2:
        raise DimensionError(f"{name} must be 2-D, got {arr.ndim}-D")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise DimensionError(f"{name} must have at least one row and column, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} has non-finite entries")
    return arr


@dataclass(frozen=True)
class SvdFactorization:
    """Thin SVD ``a = u @ diag(sigma) @ v.T`` with ``k = min(m, n)``.

    Attributes
    ----------
    u : ndarray, shape (m, k)
        Orthonormal left singular vectors.
    sigma : ndarray, shape (k,)
        Singular values, descending and nonnegative.
    v : ndarray, shape (n, k)
        Orthonormal right singular vectors.
    sweeps : int
        Jacobi sweeps used.
    """

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray
    sweeps: int = 0

    def reconstruct(self) -> np.ndarray:
        return (self.u * self.sigma) @ self.v.T


def _round_robin(n):
    """Yield the rounds of a circle-method tournament on ``n`` columns.

    Each round is a pair of index arrays ``(p, q)`` of disjoint column pairs;
    over ``n - 1`` rounds (``n`` even) every pair appears exactly once. Odd
    ``n`` gets a phantom column that sits out.
    """
    players = list(range(n + (n % 2)))
    size = len(players)
    for _ in range(size - 1):
        p, q = [], []
        for i in range(size // 2):
            x, y = players[i], players[size - 1 - i]
            if x < n and y < n:
                p.append(min(x, y))
                q.append(max(x, y))
        yield np.array(p, dtype=np.intp), np.array(q, dtype=np.intp)
        players = [players[0], players[-1]] + players[1:-1]


def _one_sided_jacobi(w):
    """Orthogonalize the columns of ``w`` (m >= n) in place.

    Returns ``(w, v, sweeps)`` with ``w_in @ v == w_out`` and the columns of
    ``w_out`` mutually orthogonal. Pairs involving a column whose norm is
    below rounding level of the whole matrix are skipped: rotating against
    such a column only stirs noise and never converges.
    """
    m, n = w.shape
    v = np.eye(n)
    if n == 1:
        return w, v, 0
    rounds = list(_round_robin(n))
    negligible = max(m, n) * _EPS * np.sqrt(np.sum(w * w))
    residual = np.inf
    for sweep in range(1, MAX_SWEEPS + 1):
        residual = 0.0
        rotated = False
        for p, q in rounds:
            wp, wq = w[:, p], w[:, q]
            alpha = np.einsum("ij,ij->j", wp, wp)
            beta = np.einsum("ij,ij->j", wq, wq)
            gamma = np.einsum("ij,ij->j", wp, wq)
            scale = np.sqrt(alpha) * np.sqrt(beta)
            live = (np.sqrt(alpha) > negligible) & (np.sqrt(beta) > negligible)
            off = np.zeros_like(gamma)
            off[live] = np.abs(gamma[live]) / scale[live]
            if off.size:
                residual = max(residual, float(off.max()))
            act = off > ORTHO_TOL
            if not act.any():
                continue
            rotated = True
            p, q = p[act], q[act]
            alpha, beta, gamma = alpha[act], beta[act], gamma[act]
            zeta = (beta - alpha) / (2.0 * gamma)
            t = np.where(zeta >= 0.0, 1.0, -1.0) / (np.abs(zeta) + np.hypot(1.0, zeta))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = c * t
            for mat in (w, v):
                xp, xq = mat[:, p], mat[:, q]
                mat[:, p] = c * xp - s * xq
                mat[:, q] = s * xp + c * xq
        if not rotated:
            return w, v, sweep
    raise ConvergenceError(
        f"one-sided Jacobi did not converge in {MAX_SWEEPS} sweeps "
        f"(off-diagonal residual {residual:.3e})",
        residual=residual,
        sweeps=MAX_SWEEPS,
    )


def _complete_basis(u, filled):
    """Replace the columns of ``u`` not marked in ``filled`` by an orthonormal
    completion drawn from the canonical basis.

    Each missing column is the canonical vector with the largest component
    outside the current span (first on ties), orthogonalized by two passes of
    classical Gram-Schmidt.
    """
    m = u.shape[0]
    basis = u[:, filled]
    for j in np.flatnonzero(~filled):
        x = np.eye(m)
        for _ in range(2):
            x -= basis @ (basis.T @ x)
        norms = np.sqrt(np.einsum("ij,ij->j", x, x))
        i = int(np.argmax(norms))
        u[:, j] = x[:, i] / norms[i]
        basis = np.column_stack([basis, u[:, j]])
    return u


def svd(a) -> SvdFactorization:
    """Thin singular value decomposition by one-sided (Hestenes) Jacobi.

    Columns are swept in a fixed round-robin order; each round rotates a set
    of disjoint column pairs at once. Convergence is declared when every pair
    of non-negligible columns has normalized inner product at most 1e-14.
    Wide matrices are handled through their transpose.

    Singular values below ``max(m, n) * eps * ||a||_F`` are reported as 0 and
    their left singular vectors are completed from the canonical basis.

    Signs are fixed so that in each left singular vector the entry of largest
    magnitude (first one on ties) is nonnegative.

    Parameters
    ----------
    a : array_like, shape (m, n)

    Returns
    -------
    SvdFactorization

    Raises
    ------
    ConvergenceError
        If 60 sweeps do not suffice.
    """
    a = as_matrix(a)
    transposed = a.shape[0] < a.shape[1]
    work = a.T.copy() if transposed else a.copy()
    m, n = work.shape

    w, v, sweeps = _one_sided_jacobi(work)
    norms = np.sqrt(np.einsum("ij,ij->j", w, w))
    order = np.argsort(-norms, kind="stable")
    sigma, w, v = norms[order], w[:, order], v[:, order]

    cutoff = max(m, n) * _EPS * np.sqrt(np.sum(a * a))
    filled = sigma > cutoff
    sigma = np.where(filled, sigma, 0.0)
    u = np.zeros((m, n))
    u[:, filled] = w[:, filled] / sigma[filled]
    if not filled.all():
        u = _complete_basis(u, filled)

    if transposed:
        u, v = v, u
    lead = np.argmax(np.abs(u), axis=0)
    flip = u[lead, np.arange(u.shape[1])] < 0.0
    u[:, flip] *= -1.0
    v[:, flip] *= -1.0
    return SvdFactorization(u=u, sigma=sigma, v=v, sweeps=sweeps)


def frobenius_norm(a) -> float:
    """Square root of the sum of squared entries."""
    a = as_matrix(a)
    return float(np.sqrt(np.sum(a * a)))


def nuclear_norm(a) -> float:
    """Sum of singular values, via :func:`svd`."""
    return float(np.sum(svd(a).sigma))


def l1_norm(a) -> float:
    """Sum of absolute entries (the matrix treated as a vector)."""
    return float(np.sum(np.abs(as_matrix(a))))


def diag_part(a) -> np.ndarray:
    """Same-shape copy of ``a`` with every off-diagonal entry zeroed."""
    a = as_matrix(a)
    out = np.zeros_like(a)
    k = min(a.shape)
    idx = np.arange(k)
    out[idx, idx] = a[idx, idx]
    return out


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a, "left operand")
    b = as_matrix(b, "right operand")
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def transpose(a) -> np.ndarray:
    return as_matrix(a).T.copy()
