"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class SpringerError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SpringerError, ValueError):
    """Malformed text input (partition, tableau, kappa code or rho string)."""


class ShapeError(SpringerError, ValueError):
    """Invalid partition, or tableaux of mismatched shapes."""


class TableauError(SpringerError, ValueError):
    """A filling that violates the row-standard or standard conditions."""


class CapExceededError(SpringerError):
    """Raised before an enumeration whose size would exceed the configured cap."""

    def __init__(self, count: int, cap: int, what: str = "tableaux"):
        super().__init__(f"{count} {what} exceeds the enumeration cap of {cap}")
        self.count = count
        self.cap = cap


class NotApplicableError(SpringerError, ValueError):
    """A move delta_i was requested on a tableau outside D_i."""


class BoundsError(SpringerError, ValueError):
    """A kappa code entry lies outside 0 <= kappa_i <= p_i - 1."""


class CrossCheckError(SpringerError):
    """Two computation methods disagreed. Always an implementation bug."""

    def __init__(self, message: str, results: dict | None = None):
        super().__init__(message)
        self.results = results or {}


class RhoValidationError(SpringerError, ValueError):
    """A rho sequence violates the R_n conditions.

    ``violations`` is a list of ``(k, rule)`` pairs, one per failed check.
    """

    def __init__(self, violations: list[tuple[int, str]]):
        self.violations = violations
        detail = "; ".join(f"k={k}: {rule}" for k, rule in violations)
        super().__init__(f"invalid rho sequence: {detail}")


class ChainError(SpringerError):
    """A computed diagram chain is not a one-box-at-a-time chain of partitions."""
