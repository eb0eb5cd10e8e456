"""Exception hierarchy shared by all qflat modules."""

from __future__ import annotations


class QflatError(Exception):
    """Base class for all errors raised by qflat."""


class NotSymmetric(QflatError):
    pass


class NotPositiveDefinite(QflatError):
    """Raised when a pivot <= 0 turns up; carries the pivot index."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"matrix is not positive definite (pivot {index} <= 0)")


class InvalidRank(QflatError):
    pass


class InvalidEntry(QflatError):
    pass


class EmptySum(QflatError):
    pass


class DimensionMismatch(QflatError):
    pass


class UnknownCriterion(QflatError):
    pass


class ContainsIdentity(QflatError):
    pass


class IndecomposableMember(QflatError):
    pass


class UndecidedMember(QflatError):
    pass


class LatticeFileError(QflatError):
    """Malformed lattice file; message carries field-level diagnostics."""
