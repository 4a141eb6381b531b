"""Shared exception types."""


class FormatError(ValueError):
    """Malformed input document (graph or colouring file)."""


class DomainError(ValueError):
    """Arguments outside an operation's domain."""


class CapacityError(RuntimeError):
    """An exact computation would exceed its configured size guard."""
