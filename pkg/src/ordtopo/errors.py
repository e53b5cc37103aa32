"""Exception types shared across the package."""


class OrderError(ValueError):
    """A relation fails a partial-order axiom, or a subset precondition."""


class CapExceededError(RuntimeError):
    """An enumeration would exceed a configured size cap."""


class UnsupportedOperationError(RuntimeError):
    """The operation is not defined for this space kind or representation."""


class SpaceFileError(ValueError):
    """A space file failed to parse; carries the offending line number."""

    def __init__(self, message, line_number):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
