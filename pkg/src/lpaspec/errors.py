"""Exception hierarchy shared by the library and the CLI.

Each class carries the process exit status the CLI maps it to.
"""


class LPAError(Exception):
    exit_code = 1


class GraphFormatError(LPAError):
    """Malformed graph text; carries the 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class ExpressionSyntaxError(LPAError):
    def __init__(self, message, position=None):
        self.position = position
        where = f"position {position}: " if position is not None else ""
        super().__init__(where + message)


class ValidationError(LPAError):
    """An input violates a documented precondition (unknown vertex, non-hereditary set, ...)."""


class ResourceLimitError(LPAError):
    exit_code = 2


class UnsupportedError(LPAError):
    exit_code = 3
