"""Exception types raised across the package."""


class TangleGammaError(Exception):
    """Base class for all errors raised by this package."""


class UnknownGenerator(TangleGammaError, KeyError):
    def __init__(self, gen):
        super().__init__(gen)
        self.gen = gen

    def __str__(self):
        return f"unknown generator {self.gen}"


class SourceMismatch(TangleGammaError, ValueError):
    pass


class InvalidGroupTable(TangleGammaError, ValueError):
    pass


class ArityMismatch(TangleGammaError, ValueError):
    """Composition of tangles (or cospans) whose inner arities disagree.

    ``position`` is the tree path of the offending Compose node (a tuple of
    0/1 child indices) and ``location`` the (line, column) of its ``;`` token
    when the expression came from the parser.
    """

    def __init__(self, message, position=(), location=None):
        super().__init__(message)
        self.position = tuple(position)
        self.location = location

    def __str__(self):
        msg = self.args[0]
        if self.location is not None:
            line, col = self.location
            msg = f"{msg} (line {line}, column {col})"
        return msg


class TangleSyntaxError(TangleGammaError, ValueError):
    def __init__(self, message, line, column):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self):
        return f"{self.args[0]} at line {self.line}, column {self.column}"


class UnknownBuiltin(TangleGammaError, KeyError):
    def __str__(self):
        return f"unknown builtin tangle {self.args[0]!r}"


class NotALink(TangleGammaError, ValueError):
    pass
