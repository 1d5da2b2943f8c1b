"""
Verifier Errors

This module provides the exception hierarchy shared by the field, matrix, group and
scenario layers. Every error raised on purpose by the toolkit derives from VerifierError,
so the scenario runner can turn it into a failed result instead of a crash.
"""


class VerifierError(Exception):
    """Base class for all toolkit errors."""


class InvalidArgumentError(VerifierError, ValueError):
    """An argument is outside the documented domain (non-prime p, m not dividing q-1, ...)."""


class FieldArithmeticError(VerifierError, ZeroDivisionError):
    """Division by zero or inversion of zero in a finite field."""


class SingularMatrixError(VerifierError):
    """A matrix that must be invertible has determinant zero."""


class CapacityExceededError(VerifierError):
    """An enumeration grew past its cap; usually a wrong construction."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded capacity {cap}")
        self.what = what
        self.cap = cap


class NotNormalError(VerifierError):
    """A subgroup expected to be normal is not."""


class UnsupportedFieldError(VerifierError):
    """The requested construction does not exist over this field."""


class ConstructionFailedError(VerifierError):
    """A deterministic search exhausted its candidates."""


class NotFoundError(VerifierError, KeyError):
    """Unknown catalogue name or scenario id."""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else ""


class PreconditionViolationError(VerifierError):
    """An operation was called on input outside its precondition."""


class DataInvalidError(VerifierError):
    """Shipped data (generator files, goldens) failed validation."""


class InconsistentActionError(VerifierError):
    """An action map sent a point outside the point set or is not a bijection."""


class InvariantViolationError(VerifierError):
    """A computed result broke an identity it must satisfy (orbit counts, implications)."""
