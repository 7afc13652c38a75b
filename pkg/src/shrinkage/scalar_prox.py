"""The shrinkage function and the scalar keep-or-kill rule.

``shrink(a, lam)`` is the unique minimizer of ``lam*|x| + (x - a)**2 / 2``;
``hard_keep(v, beta)`` minimizes ``[x != 0] + beta/2 * (x - v)**2``.
"""

import math

from .params import finite, positive

__all__ = ["shrink", "scalar_objective", "hard_keep", "keep_threshold"]


def shrink(a: float, lam: float) -> float:
    """Soft threshold ``a`` by ``lam``.

    Computed as ``copysign(max(|a| - lam, 0), a)`` so that
    ``shrink(-a, lam) == -shrink(a, lam)`` holds bit for bit. A zero result is
    always returned as ``+0.0``.

    Parameters
    ----------
    a : float
        Point to shrink; must be finite.
    lam : float
        Threshold, ``lam > 0``.

    Returns
    -------
    float
        ``a - lam`` if ``a > lam``, ``a + lam`` if ``a < -lam``, else 0.
    """
    a = finite("a", a)
    lam = positive("lambda", lam)
    return math.copysign(max(abs(a) - lam, 0.0), a) + 0.0


def scalar_objective(x: float, a: float, lam: float) -> float:
    """Return ``lam*|x| + (x - a)**2 / 2``."""
    x = finite("x", x)
    a = finite("a", a)
    lam = positive("lambda", lam)
    return lam * abs(x) + 0.5 * (x - a) ** 2


def hard_keep(v: float, beta: float) -> float:
    """Keep ``v`` when ``beta/2 * v**2 > 1``, otherwise return 0.

    Zeroing costs ``beta/2 * v**2`` and keeping costs 1; ties go to the sparse
    branch. The test is done on magnitudes, ``|v| <= sqrt(2/beta)``, so that
    ``v = sqrt(2/beta)`` computed in floating point lands on the tie.
    """
    v = finite("v", v)
    beta = positive("beta", beta)
    if abs(v) <= keep_threshold(beta):
        return 0.0
    return v


def keep_threshold(beta: float) -> float:
    """Magnitude at or below which ``hard_keep`` zeroes an entry."""
    return math.sqrt(2.0 / positive("beta", beta))
