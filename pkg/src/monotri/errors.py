"""Exception types shared across the package."""


class GeometryError(ValueError):
    """Malformed or non-linear incidence data.

    ``line_index`` is the 0-based index of the offending line when one can be
    identified.
    """

    def __init__(self, message: str, line_index: int | None = None):
        super().__init__(message)
        self.line_index = line_index


class CapExceededError(RuntimeError):
    """A search was refused because it exceeds the configured size caps."""


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of its time budget before completing."""
