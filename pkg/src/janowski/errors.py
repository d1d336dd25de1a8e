"""Exception hierarchy shared by every module of the package."""


class JanowskiError(Exception):
    """Base class for all errors raised by this package."""


class ZeroConstantTerm(JanowskiError, ZeroDivisionError):
    pass


class BranchCutViolation(JanowskiError, ValueError):
    pass


class NotNormalized(JanowskiError, ValueError):
    pass


class PoleAtNonPositiveInteger(JanowskiError, ValueError):
    pass


class DivergentAtOne(JanowskiError, ValueError):
    pass


class InvalidRadius(JanowskiError, ValueError):
    pass


class InvalidParams(JanowskiError, ValueError):
    pass


class DivergentArea(JanowskiError, ValueError):
    pass


class IndexOutOfRange(JanowskiError, IndexError):
    pass


class NoConvergence(JanowskiError, ArithmeticError):
    pass


class NonpositiveU(JanowskiError, ValueError):
    pass


class NormViolation(JanowskiError, ValueError):
    pass
