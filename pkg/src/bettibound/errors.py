"""Exception hierarchy shared by the library and the command-line front end.

Each exception carries the process exit code the CLI maps it to, so library
callers and shell users see the same classification of failures.
"""

from __future__ import annotations


class BettiBoundError(Exception):
    """Base class for every error raised by :mod:`bettibound`."""

    exit_code = 1


class UnknownBoundError(BettiBoundError, KeyError):
    """A bound identifier is not present in the registry."""

    exit_code = 2

    def __str__(self) -> str:  # KeyError quotes its argument; keep it readable
        return str(self.args[0]) if self.args else ""


class HypothesisError(BettiBoundError, ValueError):
    """Parameters violate a stated hypothesis of the formula being evaluated.

    ``clause`` names the failed condition, e.g. ``"d_i >= 2"``.
    """

    exit_code = 3

    def __init__(self, clause: str, detail: str = "") -> None:
        self.clause = clause
        self.detail = detail
        msg = f"hypothesis violated: {clause}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class UnsupportedFamilyError(BettiBoundError, ValueError):
    """A polytope family (or combination of families) is outside the supported classes."""

    exit_code = 4


class ShapeMismatchError(BettiBoundError, ValueError):
    """Inconsistent dimensions: matrix shapes, block sums, or incomparable grids."""

    exit_code = 5


def require(condition: bool, clause: str, detail: str = "") -> None:
    """Raise :class:`HypothesisError` for ``clause`` unless ``condition`` holds."""
    if not condition:
        raise HypothesisError(clause, detail)
