"""Primality predicates and quadratic-residue symbols.

All arguments are plain Python ints, so everything is arbitrary precision.
is_prime is deterministic below 3.317e24 (fixed Miller-Rabin base set) and
uses 64 pseudo-random rounds above, with the bases seeded from n itself so
repeated calls agree.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass

from .errors import BaseOutOfRange, EvenModulus, LimitTooLarge, OutOfOracleRange


class Verdict(enum.Enum):
    COMPOSITE = "composite"
    PROBABLE_PRIME = "probable_prime"
    PROVEN_PRIME = "proven_prime"


@dataclass(frozen=True)
class PrimalityVerdict:
    verdict: Verdict
    witness: int | None = None  # base or factor that proved compositeness

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.COMPOSITE


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1, via binary reciprocity.

    Equals the Legendre symbol when n is prime. Raises EvenModulus for
    even or nonpositive n.
    """
    if n < 1 or n % 2 == 0:
        raise EvenModulus(f"Jacobi symbol needs odd n >= 1, got n={n}")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _mr_decompose(n: int) -> tuple[int, int]:
    # n - 1 = 2^r * d with d odd
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    return r, d


def _mr_witness(n: int, a: int, r: int, d: int) -> bool:
    """True if a witnesses that n is composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def miller_rabin(n: int, rounds: int = 40, rng: random.Random | None = None,
                 *, bases: list[int] | None = None) -> PrimalityVerdict:
    """Strong probable-prime test on odd n > 2.

    Composite verdicts are always correct and carry the witnessing base;
    ProbablePrime has error probability <= 4**-rounds. Bases are uniform in
    [2, n-2] from rng unless an explicit `bases` list is given (useful to
    demonstrate strong pseudoprimes such as 2047 to base 2).
    """
    if n <= 2 or n % 2 == 0:
        raise ValueError(f"miller_rabin needs odd n > 2, got {n}")
    if rounds < 1 and bases is None:
        raise ValueError("rounds must be positive")
    if n == 3:
        return PrimalityVerdict(Verdict.PROBABLE_PRIME)
    r, d = _mr_decompose(n)
    if bases is None:
        rng = rng if rng is not None else random.Random()
        bases = [rng.randrange(2, n - 1) for _ in range(rounds)]
    for a in bases:
        if _mr_witness(n, a % n, r, d):
            return PrimalityVerdict(Verdict.COMPOSITE, witness=a)
    return PrimalityVerdict(Verdict.PROBABLE_PRIME)


def fermat_test(n: int, base: int) -> PrimalityVerdict:
    """Fermat test: composite when base**(n-1) mod n != 1.

    Fermat pseudoprimes (e.g. 341 to base 2) pass despite being composite.
    """
    if n <= 2:
        raise ValueError(f"fermat_test needs n > 2, got {n}")
    if not 1 < base < n - 1:
        raise BaseOutOfRange(f"base must lie in (1, {n - 1}), got {base}")
    if pow(base, n - 1, n) != 1:
        return PrimalityVerdict(Verdict.COMPOSITE, witness=base)
    return PrimalityVerdict(Verdict.PROBABLE_PRIME)


def solovay_strassen(n: int, rounds: int = 40,
                     rng: random.Random | None = None) -> PrimalityVerdict:
    """Euler-criterion test: a^((n-1)/2) must match the Jacobi symbol (a/n).

    Composite is always correct; error probability <= 2**-rounds.
    """
    if n <= 2 or n % 2 == 0:
        raise ValueError(f"solovay_strassen needs odd n > 2, got {n}")
    if rounds < 1:
        raise ValueError("rounds must be positive")
    if n == 3:
        return PrimalityVerdict(Verdict.PROBABLE_PRIME)
    rng = rng if rng is not None else random.Random()
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        j = jacobi_symbol(a, n)
        if j == 0 or pow(a, (n - 1) // 2, n) != j % n:
            return PrimalityVerdict(Verdict.COMPOSITE, witness=a)
    return PrimalityVerdict(Verdict.PROBABLE_PRIME)


WILSON_BOUND = 10**4


def wilson_oracle(n: int) -> bool:
    """Exact primality for 2 <= n <= 10^4 via (n-1)! + 1 ≡ 0 (mod n).

    Deterministic ground truth for small n; factorial cost makes larger n
    impractical, hence OutOfOracleRange beyond the bound.
    """
    if n < 2:
        raise ValueError(f"wilson_oracle needs n >= 2, got {n}")
    if n > WILSON_BOUND:
        raise OutOfOracleRange(f"n={n} exceeds the oracle bound {WILSON_BOUND}")
    fact = 1
    for i in range(2, n):
        fact = fact * i % n
    return (fact + 1) % n == 0


SIEVE_LIMIT = 10**8


def sieve(limit: int) -> list[int]:
    """Ordered primes <= limit (limit capped at 10^8)."""
    if limit < 2:
        raise ValueError(f"sieve needs limit >= 2, got {limit}")
    if limit > SIEVE_LIMIT:
        raise LimitTooLarge(f"limit {limit} exceeds {SIEVE_LIMIT}")
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start::p] = b"\x00" * ((limit - start) // p + 1)
    return [i for i in range(limit + 1) if flags[i]]


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

# Miller-Rabin with these 13 bases is deterministic below this bound
# (Sorenson-Webster style fixed-base result).
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
DETERMINISTIC_MR_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Primality dispatcher: trial division, then deterministic Miller-Rabin
    below 3.317e24, then 64 rounds with bases seeded from n (reproducible)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    r, d = _mr_decompose(n)
    for a in _DETERMINISTIC_BASES:
        if _mr_witness(n, a, r, d):
            return False
    if n < DETERMINISTIC_MR_BOUND:
        return True
    rng = random.Random(n)
    for _ in range(64):
        if _mr_witness(n, rng.randrange(2, n - 1), r, d):
            return False
    return True
