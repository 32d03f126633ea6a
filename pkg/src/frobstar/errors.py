"""Exception hierarchy shared by every frobstar module."""


class FrobstarError(Exception):
    """Base class for all errors raised by this package."""


class InvalidTriple(FrobstarError, ValueError):
    pass


class NotSorted(InvalidTriple):
    pass


class NotCoprime(InvalidTriple):
    pass


class TooSmall(InvalidTriple):
    pass


class IntegerOverflow(FrobstarError, OverflowError):
    """A value left the signed 128-bit range."""


class InternalInconsistency(FrobstarError, RuntimeError):
    """A quantity that must be an exact integer was not; indicates a bug."""


class FrameInvalid(FrobstarError, ValueError):
    pass


class TraversalStuck(FrobstarError, RuntimeError):
    pass


class DuplicateResidue(FrobstarError, ValueError):
    pass


class OutOfRange(FrobstarError, ValueError):
    """Parameters outside the domain of a star-number operation."""


class ExceptionalCase(FrobstarError, ValueError):
    """(a, n) belongs to the list where the closed forms are not asserted."""


class NonIntegerParameter(FrobstarError, ArithmeticError):
    """A division required to be exact left a remainder."""


class DomainError(FrobstarError, ValueError):
    pass
