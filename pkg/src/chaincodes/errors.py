"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ChainCodeError(Exception):
    """Base class for all errors raised by :mod:`chaincodes`."""


class ValidationError(ChainCodeError, ValueError):
    """Bad input: a precondition of an operation does not hold."""


class NonPrime(ValidationError):
    pass


class DepthTooSmall(ValidationError):
    pass


class ReduciblePolynomial(ValidationError):
    pass


class RingMismatch(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class EnumerationTooLarge(ValidationError):
    pass


class TrivialCode(ValidationError):
    pass


class EmptyCode(ValidationError):
    pass


class InvalidT(ValidationError):
    pass


class InvalidParameters(ValidationError):
    pass


class InvalidWeights(ValidationError):
    pass


class WeightNotPresent(ValidationError):
    pass


class NotUnitStable(ValidationError):
    pass


class NotRegularVector(ValidationError):
    pass


class NotPowerOfQ(ChainCodeError):
    """A cardinality that must be a power of q is not; the codeword set is corrupt."""


class InternalInconsistency(ChainCodeError):
    """Two independent routes to the same quantity disagree."""


class NotApplicable(ChainCodeError):
    pass


class CharacterizationViolated(ChainCodeError):
    pass


class Finding(ChainCodeError):
    """A negative mathematical result rather than an input error."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSrg(Finding):
    pass


class NotSwrg(Finding):
    pass


class NotTss(Finding):
    pass


class ParseError(ChainCodeError):
    """Malformed input file or descriptor; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line
