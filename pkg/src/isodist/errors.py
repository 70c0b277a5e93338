"""Exception types shared across the package.

Everything user-facing derives from IsodistError so callers can catch one
base class.  Domain violations subclass ValueError as well, which keeps
plain `except ValueError` code working.
"""


class IsodistError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(IsodistError, ValueError):
    """An argument lies outside the documented domain."""


class DimensionMismatchError(DomainError):
    """Operands live in different dimensions or on different grids."""


class RangeError(DomainError):
    """A requested size or index exceeds what the object can hold."""


class EmptySetError(DomainError):
    """An operation that needs a nonempty set got an empty one."""


class NonConvergenceError(IsodistError, RuntimeError):
    """An iterative or adaptive scheme failed to reach its tolerance."""


class BudgetExceededError(IsodistError, RuntimeError):
    """An exhaustive search would exceed the configured evaluation budget.

    The offending search-space size is kept on the instance so callers
    (and the command line) can report it.
    """

    def __init__(self, message: str, search_space: int):
        super().__init__(message)
        self.search_space = int(search_space)
