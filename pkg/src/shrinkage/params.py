"""Positive scalar parameters: threshold lambda, balancing weight beta, budget tau."""

import math
from dataclasses import dataclass
from numbers import Real
from typing import Optional

from .errors import DomainError


def positive(name: str, value) -> float:
    """Return ``value`` as a float, raising DomainError unless it is finite and > 0."""
    if isinstance(value, bool) or not isinstance(value, Real):
        raise DomainError(f"{name} must be a real number, got {value!r}")
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must satisfy {name} > 0 and be finite, got {value!r}")
    return value


def finite(name: str, value) -> float:
    if isinstance(value, bool) or not isinstance(value, Real):
        raise DomainError(f"{name} must be a real number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class PenaltyParams:
    """Validated bundle of the parameters an operator may consume.

    Unused parameters stay ``None``. ``lam`` is the threshold, ``beta`` the
    balancing weight (threshold ``1/beta``), ``tau`` the norm budget.
    """

    lam: Optional[float] = None
    beta: Optional[float] = None
    tau: Optional[float] = None

    def __post_init__(self):
        for name in ("lam", "beta", "tau"):
            value = getattr(self, name)
            if value is not None:
                label = "lambda" if name == "lam" else name
                object.__setattr__(self, name, positive(label, value))

    def as_dict(self) -> dict:
        out = {}
        if self.lam is not None:
            out["lambda"] = self.lam
        if self.beta is not None:
            out["beta"] = self.beta
        if self.tau is not None:
            out["tau"] = self.tau
        return out
