"""Exception types shared across the package."""


class SolvresError(Exception):
    """Base class for every error raised by solvres."""


class DivisionByZero(SolvresError, ZeroDivisionError):
    pass


class FieldMismatch(SolvresError, TypeError):
    pass


class ArityError(SolvresError, ValueError):
    pass


class ZeroPolynomial(SolvresError, ValueError):
    pass


class NormalizationDiverged(SolvresError, RuntimeError):
    pass


class ModuleMismatch(SolvresError, ValueError):
    pass


class ZeroElement(SolvresError, ValueError):
    pass


class HomogeneityError(SolvresError, ValueError):
    pass


class MissingTrace(SolvresError, LookupError):
    pass


class ShapeError(SolvresError, ValueError):
    pass


class IterationOverrun(SolvresError, RuntimeError):
    pass


class DSLError(SolvresError, ValueError):
    """Problem-file error carrying a 1-based source location."""

    def __init__(self, reason, line=None, col=None):
        self.reason = reason
        self.line = line
        self.col = col
        where = f"{line}:{col}: " if line is not None else ""
        super().__init__(where + reason)


class DSLSyntaxError(DSLError):
    pass


class UnknownSymbol(DSLError):
    pass


class ValidationFailed(DSLError):
    pass
