"""Exception hierarchy shared by all modules."""


class SessionTypeError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SessionTypeError, ValueError):
    """Malformed concrete syntax.  ``position`` is a 0-based character offset."""

    def __init__(self, position: int, message: str):
        super().__init__(f"at position {position}: {message}")
        self.position = position
        self.message = message


class RoleError(SessionTypeError, ValueError):
    """A global type violates the two-role discipline."""


class DomainError(SessionTypeError, ValueError):
    """An observable was queried with a label outside its domain."""


class NoTransition(SessionTypeError, LookupError):
    """A continuation was requested for a label the process cannot perform."""


class ExplorationLimit(SessionTypeError, RuntimeError):
    """State exploration exceeded its cap.  Reduction always terminates, so this is a bug."""


class LimitError(SessionTypeError, ValueError):
    """Enumeration parameters exceed the configured caps."""


class Untypeable(SessionTypeError, ValueError):
    """The process has a shape no typing rule covers."""


class ProjectionError(SessionTypeError, ValueError):
    """A global type cannot be projected onto the requested role."""
