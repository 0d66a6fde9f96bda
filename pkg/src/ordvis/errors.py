"""Exception types shared across the package."""

from __future__ import annotations

from typing import Any


class GraphError(ValueError):
    """Malformed graph input (bad endpoints, self-loops, bad files)."""


class PreconditionError(ValueError):
    """An algorithm was handed an input outside its guaranteed class.

    ``witness`` carries an object certifying the violation, when one exists.
    """

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class NotHFreeError(PreconditionError):
    pass


class NotCappedError(PreconditionError):
    pass


class InternalContradiction(RuntimeError):
    """A step whose success is guaranteed by the theory failed.

    Raised instead of returning an unsound certificate; it always means some
    upstream precondition did not actually hold.
    """

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class GuardExceeded(ValueError):
    """A brute-force oracle refused an instance above its size guard."""


class CoordinateRangeError(ValueError):
    """A coordinate is too large for the exact-arithmetic guarantee."""
