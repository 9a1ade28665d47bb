"""Exception hierarchy shared by every hppkds module."""


class HppkError(Exception):
    """Base class for all errors raised by this package."""


# arithmetic

class NotCoprime(HppkError, ValueError):
    pass


class ZeroModulus(HppkError, ValueError):
    pass


class InvalidRange(HppkError, ValueError):
    pass


class TailOverflow(HppkError, ArithmeticError):
    """Barrett result landed in [n, 2n): the floor quotient came up one short."""

    def __init__(self, z, modulus):
        super().__init__(f"Barrett result {z} is not below modulus {modulus}")
        self.z = z
        self.modulus = modulus


# keys and signing

class UnknownLevel(HppkError, ValueError):
    pass


class InvalidParameters(HppkError, ValueError):
    pass


class DimensionMismatch(HppkError, ValueError):
    pass


class RngFailure(HppkError, RuntimeError):
    pass


class RetryExhausted(HppkError, RuntimeError):
    pass


class MalformedSignature(HppkError, ValueError):
    pass


# serialization

class CodecError(HppkError, ValueError):
    pass


class BadMagic(CodecError):
    pass


class BadLength(CodecError):
    pass


class UnknownVersion(CodecError):
    pass


class BadKind(CodecError):
    pass


# cryptanalysis

class BudgetExceeded(HppkError, RuntimeError):
    pass


class RefusedScale(HppkError, RuntimeError):
    pass


class InsufficientSignatures(HppkError, ValueError):
    pass


class DegenerateSystem(HppkError, ArithmeticError):
    pass
