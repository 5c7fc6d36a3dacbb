"""Error types shared across the engine."""


class LimitStabError(Exception):
    """Base class for engine errors."""


class ModelDataError(LimitStabError):
    """A model table is missing an entry that the computation needs.

    Missing m-table entries and missing P-seeds are hard errors by design:
    the engine never invents geometry.
    """


class ModelParseError(LimitStabError):
    """A model file failed to parse or validate; carries a line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
