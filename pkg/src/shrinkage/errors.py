"""Exception hierarchy shared by the library and the CLI."""


class ShrinkageError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ShrinkageError, ValueError):
    """A parameter or entry lies outside the operator's domain."""


class DimensionError(ShrinkageError, ValueError):
    """Matrix shapes are incompatible, or an input is too large for an oracle."""


class ConvergenceError(ShrinkageError, ArithmeticError):
    """An iterative factorization exhausted its sweep budget.

    Attributes
    ----------
    residual : float
        Largest normalized off-diagonal quantity at the last sweep.
    sweeps : int
        Number of sweeps performed.
    """

    def __init__(self, message, residual, sweeps):
        super().__init__(message)
        self.residual = residual
        self.sweeps = sweeps


class ParseError(ShrinkageError, ValueError):
    """Malformed matrix text. ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line, column=None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column
