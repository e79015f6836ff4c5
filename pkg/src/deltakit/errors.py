"""Exception hierarchy shared by every deltakit module."""


class DeltaKitError(Exception):
    """Base class for all deltakit errors."""


class InvalidGenerators(DeltaKitError, ValueError):
    """The three integers do not minimally generate a numerical semigroup."""


class NonPositive(InvalidGenerators):
    pass


class NotCoprime(InvalidGenerators):
    """Raised for generators with gcd > 1 and for delta pairs that must be coprime."""


class NotMinimal(InvalidGenerators):
    pass


class DuplicateGenerator(InvalidGenerators):
    pass


class SymmetricSemigroup(DeltaKitError):
    def __init__(self, message="semigroup is symmetric"):
        super().__init__(message)


class SearchBoundExceeded(DeltaKitError):
    pass


class IndexOutOfRange(DeltaKitError, IndexError):
    pass


class ArithmeticOverflow(DeltaKitError, OverflowError):
    """A value left the signed 64-bit domain the library promises to work in."""
