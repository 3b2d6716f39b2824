"""Exception types raised by the algebra, symmetric-function and Casimir layers."""


class QCasimirError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(QCasimirError, ZeroDivisionError):
    pass


class PoleAtPoint(QCasimirError, ZeroDivisionError):
    """The normalized denominator vanishes at the evaluation point."""


class NotDivisible(QCasimirError, ArithmeticError):
    """Exact division by a linear factor ``L_i - L_j`` left a nonzero remainder."""


class IndexOutOfRange(QCasimirError, IndexError):
    pass


class BoundExceeded(QCasimirError, ValueError):
    pass


class NotSymmetric(QCasimirError, ValueError):
    pass


class CancellationFailure(QCasimirError, ArithmeticError):
    """A denominator factor survived in a quantity that must be polynomial."""


class DegenerateWeight(QCasimirError, ValueError):
    pass


class NonDominantWeight(QCasimirError, ValueError):
    pass


class SolveFailure(QCasimirError, ArithmeticError):
    """An expansion in Casimir generators is inconsistent or underdetermined."""
