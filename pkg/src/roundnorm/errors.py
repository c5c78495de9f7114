"""Error taxonomy shared by every module.

Three failure classes are distinguished because the command line maps
them to distinct exit codes: bad input data (DomainError, exit 1),
a configurable cap being exceeded (ResourceCapError, exit 2), and an
internal cross-check failing (SoundnessError, exit 3).  A SoundnessError
is never a property of the input; it means two routes that must agree
did not, i.e. the library itself is wrong somewhere.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Input violates a documented precondition."""


class ResourceCapError(RuntimeError):
    """A bounded search hit its cap before reaching a verdict."""

    def __init__(self, cap_name: str, cap_value, message: str = ""):
        self.cap_name = cap_name
        self.cap_value = cap_value
        text = f"cap {cap_name}={cap_value} exceeded"
        if message:
            text += f": {message}"
        super().__init__(text)


class SoundnessError(RuntimeError):
    """Two independent routes to the same fact disagreed."""


class ParseError(ValueError):
    """Malformed textual or JSON input; carries line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
