"""Exception types shared across the package.

The CLI maps these onto exit codes: hypothesis violations exit 1, input
format problems exit 2 and broken internal invariants exit 3.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple


class PowcertError(Exception):
    pass


class HypothesisViolation(PowcertError, ValueError):
    """A sequence does not satisfy the hypotheses an operation requires."""

    def __init__(self, message: str, violations: Iterable[str] = ()):
        self.violations: Tuple[str, ...] = tuple(violations)
        if self.violations:
            message = f"{message}: " + "; ".join(self.violations)
        super().__init__(message)


class SequenceFormatError(PowcertError, ValueError):
    """Malformed sequence or polynomial input file."""

    def __init__(self, message: str, field: Sequence = (), line: int = None, column: int = None):
        self.field = tuple(field)
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}" + (f", column {column}" if column is not None else ""))
        if self.field:
            where.append("field " + "".join(f"[{f!r}]" for f in self.field))
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class PowerSumNotIntegral(PowcertError, ValueError):
    """The power sum at some index is not a polynomial."""


class InvariantFailure(PowcertError, RuntimeError):
    """An internally checked post-condition did not hold."""
