"""Exception hierarchy shared by every module of the package."""


class FuzzAlgError(Exception):
    """Base class for all errors raised by fuzzalg."""


class UndefinedSum(FuzzAlgError, ArithmeticError):
    """(-inf) + (+inf) was requested."""


class MonotonicityViolation(FuzzAlgError):
    """A function declared monotone was observed not to be."""


class InvalidGrid(FuzzAlgError, ValueError):
    pass


class ConstraintViolation(FuzzAlgError, ValueError):
    """A construction-time invariant of an operator or structure failed.

    ``constraint`` names the violated condition, e.g. ``"h(e) = 0"``.
    """

    def __init__(self, message, constraint=None):
        super().__init__(message)
        self.constraint = constraint


class NotContinuous(FuzzAlgError):
    pass


class InternalInvariantViolation(FuzzAlgError):
    pass


class NotLocallyClassifiable(FuzzAlgError):
    pass


class ClosureError(FuzzAlgError):
    """An operation leaves the finite carrier it is evaluated on."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class BudgetExceeded(FuzzAlgError):
    pass


class RegularityRequired(FuzzAlgError):
    pass


class MissingProduct(FuzzAlgError):
    pass


class SeparationViolated(FuzzAlgError):
    pass


# Errors raised while reading .fz scripts.  All carry a SourceSpan.

class SourceSpan:
    """1-based line and column of the first character, plus length."""

    __slots__ = ("line", "col", "length")

    def __init__(self, line: int, col: int, length: int = 1):
        self.line, self.col, self.length = line, col, max(1, length)

    def __repr__(self):
        return f"{self.line}:{self.col}"

    def __eq__(self, other):
        return isinstance(other, SourceSpan) and (self.line, self.col, self.length) == (
            other.line, other.col, other.length)

    def __hash__(self):
        return hash((self.line, self.col, self.length))


class DslError(FuzzAlgError):
    kind = "error"

    def __init__(self, message, span: SourceSpan):
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self):
        return f"{self.span.line}:{self.span.col}: {self.kind}: {self.message}"


class LexError(DslError):
    kind = "LexError"


class ParseError(DslError):
    kind = "ParseError"

    def __init__(self, message, span, expected=()):
        super().__init__(message, span)
        self.expected = tuple(expected)


class UndefinedName(DslError):
    kind = "NameError"


class DuplicateName(DslError):
    kind = "NameError"


class TypeMismatch(DslError):
    kind = "TypeMismatch"


class DomainGap(DslError):
    kind = "DomainGap"


class DomainOverlap(DslError):
    kind = "DomainOverlap"


class ScriptConstraintViolation(DslError, ConstraintViolation):
    """A ConstraintViolation raised while elaborating a definition."""

    kind = "ConstraintViolation"

    def __init__(self, message, span, constraint=None):
        DslError.__init__(self, message, span)
        self.constraint = constraint
