"""Exception hierarchy shared by every module of the package."""


class GaloisRMError(Exception):
    """Base class for all errors raised by galoisrm."""


class InvalidParameters(GaloisRMError, ValueError):
    pass


class ParamsTooLarge(InvalidParameters):
    pass


class NonUnit(GaloisRMError, ArithmeticError):
    pass


class NonMonicDivisor(GaloisRMError, ArithmeticError):
    pass


class NonUnitLeading(GaloisRMError, ArithmeticError):
    pass


class ZeroPolynomial(GaloisRMError, ValueError):
    pass


class NoPrimitivePolynomial(GaloisRMError, RuntimeError):
    pass


class CoefficientNotInBase(GaloisRMError, RuntimeError):
    """A value that must lie in the base ring L did not (internal bug trap)."""


class LengthMismatch(GaloisRMError, ValueError):
    pass


class NotFree(GaloisRMError, ValueError):
    pass


class NotInvertible(GaloisRMError, ArithmeticError):
    pass


class OrderOutOfRange(GaloisRMError, ValueError):
    pass


class OutOfRange(GaloisRMError, ValueError):
    pass


class PreconditionViolated(GaloisRMError, ValueError):
    pass


class EnumerationTooLarge(GaloisRMError, RuntimeError):
    pass
