"""Exception types shared across the package."""


class DGBError(Exception):
    """Base class for all errors raised by this package."""


class RankMismatchError(DGBError, ValueError):
    """Shift tuples of different rank were combined, or a variable's shift
    does not match the ring's declared rank."""


class ExactDivisionError(DGBError, ArithmeticError):
    """Exact division was requested but the divisor does not divide."""


class RingMismatchError(DGBError, ValueError):
    """Polynomials attached to different rings (or orderings) were mixed."""


class StaircaseError(DGBError, ValueError):
    """A generator mentions a variable outside the quotient staircase."""


class ParseError(DGBError, ValueError):
    """Syntax or validation error in problem-file or polynomial text."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = "" if line is None else f" at line {line}, column {column}"
        super().__init__(f"{message}{where}")
