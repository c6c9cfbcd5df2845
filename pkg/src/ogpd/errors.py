"""Exception hierarchy shared by every module."""

from __future__ import annotations


class OGError(Exception):
    """Base class for all library errors."""


class StructureError(OGError, ValueError):
    """Malformed input: dangling ids, duplicate ids, wrong shapes."""


class PreconditionError(OGError, ValueError):
    """An operation was called outside its domain."""


class AxiomViolation(OGError):
    """A structure failed validation; ``report`` holds the witnesses."""

    def __init__(self, report, what: str = "structure"):
        self.report = report
        first = report.violations[0] if report.violations else None
        detail = f": {first}" if first else ""
        super().__init__(f"{what} failed validation{detail}")


class InvariantBreach(OGError, RuntimeError):
    """Something that validation guarantees turned out false."""


class BudgetExceeded(OGError, RuntimeError):
    """A bounded search ran out of budget before finishing."""
