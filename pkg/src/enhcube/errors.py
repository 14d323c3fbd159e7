"""Exception types shared across the package."""


class DomainError(ValueError):
    """Arguments fall outside an operation's domain (bad vertex, bad class, u == v, ...)."""


class ResourceLimitError(RuntimeError):
    """An exhaustive routine was asked to run above its configured size cap."""
