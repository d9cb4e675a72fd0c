class UsageError(ValueError):
    """Caller passed arguments that violate an operation's contract."""


class DomainError(ValueError):
    """Mathematically undefined input (non-unit inverse, divergent theta argument, ...)."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; always indicates a bug, never bad data."""
