"""
Exceptions raised by the retakh package.

Every error derives from RetakhError so that the command line front end can
turn it into a diagnostic and an exit code; each one also derives from the
closest builtin so that callers can keep catching ValueError and friends.
"""


class RetakhError(Exception):
    pass


class ConfigError(RetakhError, ValueError):
    pass


class OrderMismatchError(RetakhError, ValueError):
    pass


class NonUnitDivisionError(RetakhError, ZeroDivisionError):
    pass


class UnsupportedBranchError(RetakhError, ValueError):
    pass


class CompositionError(RetakhError, ValueError):
    pass


class FixedPointDivergenceError(RetakhError, ArithmeticError):
    pass


class InvalidPathError(RetakhError, ValueError):
    pass


class BudgetExceededError(RetakhError, ValueError):
    pass


class DomainError(RetakhError, ValueError):
    pass


class ConsistencyError(RetakhError, AssertionError):
    pass


class CoefficientIndexError(RetakhError, IndexError):
    pass
