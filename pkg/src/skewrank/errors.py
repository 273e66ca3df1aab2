"""Exception hierarchy shared by every module of the package."""


class SkewRankError(Exception):
    """Base class for all package errors."""


class FieldMismatch(SkewRankError, ValueError):
    pass


class DivisionByZero(SkewRankError, ZeroDivisionError):
    pass


class ZeroScalar(SkewRankError, ValueError):
    pass


class IndexOutOfRange(SkewRankError, IndexError):
    pass


class DimensionMismatch(SkewRankError, ValueError):
    pass


class InvalidPermutation(SkewRankError, ValueError):
    pass


class SingularBlock(SkewRankError, ArithmeticError):
    pass


class InvalidParams(SkewRankError, ValueError):
    pass


class StructureViolation(SkewRankError, AssertionError):
    """A structural postcondition failed; always indicates a bug."""


class NotAViolation(SkewRankError, ValueError):
    pass


class InputError(SkewRankError, ValueError):
    pass


class TooLarge(SkewRankError, ValueError):
    pass


class InternalError(SkewRankError, RuntimeError):
    """A certificate or witness failed its own re-verification."""


class ParseError(SkewRankError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
