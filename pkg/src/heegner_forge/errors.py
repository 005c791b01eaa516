"""Typed errors raised across the package.

Every domain error derives from HeegnerForgeError so the CLI can map the
whole family to exit code 1; genuine programming errors (violated
preconditions of the "caller got it wrong" kind) stay ValueError.
"""


class HeegnerForgeError(Exception):
    """Base class for all domain errors."""


class NonIntegralConstant(HeegnerForgeError):
    """(A^2 + H)/4 or an Euler-Rabinowitsch constant term is not an integer."""


class EvenModulus(HeegnerForgeError):
    """Jacobi symbol requested for an even (or nonpositive) modulus."""


class BaseOutOfRange(HeegnerForgeError):
    """Fermat test base outside the open interval (1, n-1)."""


class OutOfOracleRange(HeegnerForgeError):
    """Wilson oracle asked about n beyond its factorial-cost bound."""


class LimitTooLarge(HeegnerForgeError):
    """Sieve limit above the supported maximum."""


class EmptyRange(HeegnerForgeError):
    """A scan or sweep range is empty."""


class NotPrime(HeegnerForgeError):
    """An argument that must be prime is not."""


class DomainError(HeegnerForgeError):
    """Numeric argument outside a function's mathematical domain."""


class ValueTooSmall(HeegnerForgeError):
    """A polynomial value is too small for the expected-count sum."""


class InvalidRange(HeegnerForgeError):
    """Optimizer range does not satisfy 0 <= n_lo < n_hi."""


class ExhaustedAttempts(HeegnerForgeError):
    """Structured prime generation used up max_attempts without success."""


class NotStructured(HeegnerForgeError):
    """4p - H is not an odd perfect square; p is not in the family for this H."""


class ExponentNotCoprime(HeegnerForgeError):
    """RSA public exponent shares a factor with phi(N)."""


class EvenUpperIndex(HeegnerForgeError):
    """Channel plan upper index n2 must be odd."""


class ChannelOutOfRange(HeegnerForgeError):
    """Channel index outside [0, n2]."""


class ParseError(HeegnerForgeError):
    """Key document is malformed or violates its integrity invariants."""


class MissingField(HeegnerForgeError):
    """Key document lacks a required field."""
