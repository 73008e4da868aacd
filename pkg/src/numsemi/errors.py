"""Exception hierarchy.

``InputError`` subclasses signal bad user input or unmet preconditions,
``ResourceLimit`` a configured cap, and ``InternalError`` subclasses a
broken invariant (a bug, never expected on valid input).
"""


class SemigroupError(Exception):
    pass


class InputError(SemigroupError, ValueError):
    pass


class EmptyInput(InputError):
    pass


class InvalidGenerator(InputError):
    pass


class GcdNotOne(InputError):
    pass


class NonMinimalBasis(InputError):
    def __init__(self, message, redundant=None):
        super().__init__(message)
        self.redundant = redundant


class InvalidQ(InputError):
    pass


class NotCoprime(InputError):
    pass


class ZeroWq(InputError):
    pass


class OrderMismatch(InputError):
    pass


class BettiMismatch(InputError):
    pass


class ResourceLimit(SemigroupError):
    pass


class InternalError(SemigroupError, AssertionError):
    pass


class InexactDivision(InternalError, ArithmeticError):
    pass


class ConsistencyFailure(InternalError):
    pass


class IdentityViolation(InternalError):
    """Raised when a proved identity fails; ``dump`` carries the diagnostics."""

    def __init__(self, message, dump=None):
        super().__init__(message)
        self.dump = dump or {}
