"""Exception types shared across the package."""


class BimahonianError(Exception):
    """Base class for all package errors."""


class ConductorMismatch(BimahonianError, ValueError):
    """Operands live in cyclotomic fields with incompatible conductors."""


class InexactDivision(BimahonianError, ArithmeticError):
    """A polynomial division left a nonzero remainder."""

    def __init__(self, remainder, message=None):
        self.remainder = remainder
        super().__init__(message or f"inexact division, remainder {remainder}")


class BudgetExceeded(BimahonianError, RuntimeError):
    """An enumeration would exceed its configured size budget."""


class VerificationError(BimahonianError, AssertionError):
    """An identity that must hold exactly failed (indicates a bug)."""
