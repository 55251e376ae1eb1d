"""Exception hierarchy shared by every module of the package."""


class NonArchError(Exception):
    """Base class for all errors raised by ``nonarch``."""


class InvalidParameter(NonArchError, ValueError):
    """A parameter is malformed or out of range (non-prime p, bad literal, ...)."""


class SizeGuardError(InvalidParameter):
    """An exhaustive search was requested on a space that is too large."""


class IncompatibleOperands(NonArchError, ValueError):
    """Operands live in different fields or spaces."""


class PreconditionError(NonArchError, ValueError):
    """A documented precondition does not hold (e.g. |2| != 1 where required)."""


class DomainError(NonArchError, ValueError):
    """A map was applied outside its domain."""


class ExactZeroDivision(NonArchError, ZeroDivisionError):
    """Division by an exact zero."""


class InsufficientPrecision(NonArchError, ArithmeticError):
    """The answer is not determined by the digits carried at working precision."""


class ContractViolation(NonArchError, ArithmeticError):
    """An iterated map failed to contract distances.

    ``pair`` holds the two points whose images were not strictly closer.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NonConvergence(NonArchError, ArithmeticError):
    """An iteration did not reach its target within the allowed budget."""
