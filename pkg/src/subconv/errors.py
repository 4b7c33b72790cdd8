"""Exception types raised by the analysis layers."""


class SubdivisionError(Exception):
    """Base class for all errors raised by :mod:`subconv`."""


class ZeroArgument(SubdivisionError, ZeroDivisionError):
    """A Laurent polynomial with negative powers was evaluated at zero."""


class NotDivisible(SubdivisionError, ArithmeticError):
    """Exact division by ``1 + z`` left a nonzero remainder."""


class PreconditionViolated(SubdivisionError, ValueError):
    pass


class MaskParseError(SubdivisionError, ValueError):
    """A mask or data document could not be parsed."""
