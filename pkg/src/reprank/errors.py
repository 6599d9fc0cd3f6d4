"""Exception types shared across the package."""


class InputError(Exception):
    """Bad user-supplied input. The CLI maps every InputError to exit code 2."""


class ParseError(InputError):
    """Malformed graph or ranking text; carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class ModeError(InputError):
    """Operation applied to a graph whose feedback mode does not allow it."""


class UnknownNodeError(InputError):
    """A node name that is not part of the graph or ranking at hand."""


class NodeSetMismatchError(InputError):
    """Two structures that must share a node set do not."""


class EnumerationCapError(InputError):
    """Refused to enumerate total preorders over more nodes than the cap allows."""
