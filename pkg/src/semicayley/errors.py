"""Exception hierarchy."""


class SemiCayleyError(Exception):
    pass


class InvalidGroupError(SemiCayleyError, ValueError):
    pass


class InvalidElementError(SemiCayleyError, ValueError):
    pass


class ResourceLimitError(SemiCayleyError):
    """A configured size cap was exceeded."""


class InvalidSpecError(SemiCayleyError, ValueError):
    pass


class PreconditionError(SemiCayleyError, ValueError):
    pass


class ParseError(SemiCayleyError, ValueError):
    """Malformed group or element literal; ``position`` is a 0-based column."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        self.message = message
        super().__init__(f"{message} at position {position}\n  {text}\n  {' ' * position}^")
