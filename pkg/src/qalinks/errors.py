"""Exception types shared across the package."""


class PDParseError(ValueError):
    """Malformed or invalid planar-diagram text.

    ``position`` is the character offset into the input when one is known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; this always indicates a bug."""


class CrossingLimitError(RuntimeError):
    """A diagram exceeds the configured crossing cap for an exponential routine."""
