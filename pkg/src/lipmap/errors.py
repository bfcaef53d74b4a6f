"""Exception types shared across the package."""


class LipmapError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LipmapError):
    """Malformed arguments or input files (bad vertex ids, duplicate edges, ...)."""


class PreconditionError(LipmapError):
    """A documented precondition was violated (disconnected graph, non-tree, ...)."""


class BudgetExceededError(LipmapError):
    """An enumeration exceeded its configured work budget."""
