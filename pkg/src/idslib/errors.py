"""Exception types shared across the library."""


class IdsLibError(Exception):
    """Base class for every error this library raises deliberately."""


class FormatError(IdsLibError):
    """Malformed input document (edge list, JSON graph, profile text)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class LimitError(IdsLibError):
    """A configured safety limit (vertex limit, scan cap) was exceeded."""


class ContractError(IdsLibError):
    """A caller violated an operation's precondition."""


class InternalConsistencyError(IdsLibError):
    """An invariant the library maintains internally was found broken.

    Seeing this error means a bug in the library itself, not bad input.
    """
