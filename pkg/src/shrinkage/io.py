"""Headerless CSV matrices and the JSON run report."""

import io as _io
import json
import math
import re
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ParseError
from .oracle import OracleReport

__all__ = ["MatrixDocument", "RunReport", "read_csv", "write_csv", "format_float", "write_report"]

_NUMBER = re.compile(r"[+-]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?")


@dataclass(frozen=True)
class MatrixDocument:
    matrix: np.ndarray
    source: str = "stdin"


@dataclass
class RunReport:
    """Diagnostics for one CLI run; serialized with a fixed key order."""

    operation: str
    params: dict
    effective_lambda: float
    objective: float
    sigma_in: list = field(default_factory=list)
    sigma_out: list = field(default_factory=list)
    rank_out: int = 0
    cardinality_out: int = 0
    oracle: Optional[OracleReport] = None

    def as_dict(self) -> dict:
        return {
            "operation": self.operation,
            "params": {k: float(v) for k, v in self.params.items()},
            "effective_lambda": float(self.effective_lambda),
            "objective": float(self.objective),
            "sigma_in": [float(x) for x in self.sigma_in],
            "sigma_out": [float(x) for x in self.sigma_out],
            "rank_out": int(self.rank_out),
            "cardinality_out": int(self.cardinality_out),
            "oracle": None if self.oracle is None else self.oracle.as_dict(),
        }


def _text(source):
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, (bytes, bytearray)):
        try:
            data = bytes(data).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8 ({exc.reason})", line=1) from None
    return data


def read_csv(source, name="stdin") -> MatrixDocument:
    """Parse a headerless comma-separated matrix.

    ``source`` may be a binary or text stream, ``bytes``, or ``str``. Lines end
    in ``\\n`` or ``\\r\\n``; one trailing blank line is allowed. Fields are
    decimal literals; ``nan``/``inf`` and anything else ``float`` would
    tolerate beyond plain decimals are rejected.
    """
    text = _text(source)
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty input", line=1)
    rows = []
    for lineno, line in enumerate(lines, start=1):
        if line.endswith("\r"):
            line = line[:-1]
        if line == "":
            raise ParseError("blank line", line=lineno)
        row = []
        for col, token in enumerate(line.split(","), start=1):
            if not _NUMBER.fullmatch(token):
                raise ParseError(f"not a decimal number: {token!r}", line=lineno, column=col)
            value = float(token)
            if not math.isfinite(value):
                raise ParseError(f"value out of range: {token!r}", line=lineno, column=col)
            row.append(value)
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"expected {len(rows[0])} fields, found {len(row)}",
                             line=lineno, column=min(len(row), len(rows[0])) + 1)
        rows.append(row)
    return MatrixDocument(matrix=np.array(rows, dtype=np.float64), source=name)


def format_float(x) -> str:
    """Shortest decimal that reads back to the same double; ``2.0`` -> ``"2"``."""
    r = repr(float(x))
    return r[:-2] if r.endswith(".0") else r


def _emit(sink, text):
    if isinstance(sink, (_io.RawIOBase, _io.BufferedIOBase)) or "b" in getattr(sink, "mode", ""):
        sink.write(text.encode("utf-8"))
    else:
        sink.write(text)


def write_csv(m, sink) -> None:
    m = np.atleast_2d(np.asarray(m, dtype=np.float64))
    _emit(sink, "".join(",".join(format_float(x) for x in row) + "\n" for row in m))


def write_report(report: RunReport, sink) -> None:
    _emit(sink, json.dumps(report.as_dict(), indent=2, allow_nan=False) + "\n")
