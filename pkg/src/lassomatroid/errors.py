"""Exceptions shared across the package."""


class NewickError(ValueError):
    """Malformed Newick input. Carries the 0-based text position when known."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ScaleBoundError(RuntimeError):
    """An exhaustive computation was asked to exceed its configured desk-scale bound."""
