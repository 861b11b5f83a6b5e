"""Exception types shared across the package.

Every structural failure carries a ``witness``: the tuple of element
indices (or other values) that exhibits the violation.
"""

from typing import Optional


class StructureError(ValueError):
    """Raw data or an argument does not describe a valid structure."""

    def __init__(self, message: str, witness: Optional[tuple] = None):
        super().__init__(message)
        self.witness = witness


class NotAPartialOrder(StructureError):
    pass


class NotAntitone(StructureError):
    pass


class NotInvolutive(StructureError):
    pass


class BoundsMissing(StructureError):
    pass


class NotALattice(StructureError):
    pass


class NotOrthomodular(StructureError):
    pass


class NotModular(StructureError):
    pass


class NotDistributive(StructureError):
    pass


class NotSharp(StructureError):
    pass


class UndefinedMeet(StructureError):
    pass


class DimensionMismatch(StructureError):
    pass


class UnknownName(KeyError):
    pass


class ParseError(ValueError):
    """Malformed text input; ``line`` is 1-based (0 when not line-specific)."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class BudgetExceeded(RuntimeError):
    """A search hit its configured size cap before finishing."""


SearchBudgetExceeded = BudgetExceeded
