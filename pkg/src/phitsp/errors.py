"""Exception types shared across the package."""


class PhiTspError(Exception):
    """Base class for all library errors."""


class MalformedMultisetError(PhiTspError):
    """An edge multi-set references edge ids outside its host graph."""


class NoTJoinError(PhiTspError):
    """The requested T-join does not exist (parity violated in some component)."""


class NoMatchingError(PhiTspError):
    """No finite-cost perfect matching exists."""


class PreconditionError(PhiTspError):
    """An operation was called with input violating its stated precondition."""


class InfeasibleError(PhiTspError):
    """The Phi-TSP instance admits no tour."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UncrossingError(PhiTspError):
    """Uncrossing exhausted its step budget without reaching a laminar support."""


class SizeLimitError(PhiTspError):
    """An enumeration exceeded its configured size cap."""


class ParseError(PhiTspError):
    """Instance or tour file is syntactically malformed."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class SemanticError(ParseError):
    """Instance file parses but violates a semantic constraint."""
