"""Structured prime generation and RSA-style key assembly.

A structured prime is p = (bk^2 + H)/4 with bk = 2*Z*k - 1 for secret
(Z, k); it is the family member's value at n = 0, so one evaluation per
candidate suffices. Acceptance requires a minimum bit length, the Jacobi
pre-check (-H/p) = 1 (redundant for true structured primes but a cheap
composite filter) and Miller-Rabin. Knowing p and H reveals only the
product Z*k via an integer square root; the split into (Z, k) is the
secret.

Security posture: Miller-Rabin defaults to 40 rounds; a single round
(mr_rounds=1) reproduces the original single-pass behavior but is not a
safe default for key material. Textbook RSA here is a demo: no padding,
no constant-time arithmetic.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass

from .errors import (ExhaustedAttempts, ExponentNotCoprime, MissingField,
                     NonIntegralConstant, NotStructured, ParseError)
from .polynomial import validate_heegner
from .primality import Verdict, jacobi_symbol, miller_rabin

PAPER_RANGE = (10**80, 10**85)


@dataclass(frozen=True)
class KeygenConfig:
    H: int = 163
    min_bits: int = 200
    z_range: tuple[int, int] = PAPER_RANGE
    k_range: tuple[int, int] = PAPER_RANGE
    max_attempts: int = 10000
    mr_rounds: int = 40  # set 1 to reproduce the original single-pass mode
    rng_seed: int | None = None

    def __post_init__(self):
        validate_heegner(self.H)
        if self.min_bits < 8:
            raise ValueError(f"min_bits must be >= 8, got {self.min_bits}")
        for name, (lo, hi) in (("z_range", self.z_range), ("k_range", self.k_range)):
            if lo >= hi:
                raise ValueError(f"{name} must satisfy low < high, got ({lo}, {hi})")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be positive")
        if self.mr_rounds < 1:
            raise ValueError("mr_rounds must be positive")


@dataclass(frozen=True)
class StructuredPrime:
    Z: int
    k: int
    bk: int  # 2*Z*k - 1
    p: int   # (bk^2 + H)/4

    @property
    def zk(self) -> int:
        return self.Z * self.k


@dataclass(frozen=True)
class StructuredKeyPair:
    sp1: StructuredPrime
    sp2: StructuredPrime
    N: int
    H: int = 163


def integer_sqrt(n: int) -> int:
    """floor(sqrt(n)), exact for arbitrary precision."""
    if n < 0:
        raise ValueError(f"integer_sqrt needs n >= 0, got {n}")
    return math.isqrt(n)


def generate_structured_prime(config: KeygenConfig,
                              rng: random.Random | None = None) -> StructuredPrime:
    """Sample (Z, k) until (bk^2 + H)/4 clears the bit-length, Jacobi and
    Miller-Rabin gates, or ExhaustedAttempts after max_attempts.

    Z and k are uniform over their inclusive ranges, resampled when equal
    (the pair must be distinct). Deterministic for a fixed rng.
    """
    if config.H % 4 != 3:
        raise NonIntegralConstant(
            f"H={config.H} makes (bk^2 + H)/4 non-integral; need H ≡ 3 (mod 4)")
    rng = rng if rng is not None else random.Random(config.rng_seed)
    for _ in range(config.max_attempts):
        Z = rng.randint(*config.z_range)
        k = rng.randint(*config.k_range)
        if Z == k:
            continue
        bk = 2 * Z * k - 1
        p = (bk * bk + config.H) // 4
        if p.bit_length() < config.min_bits:
            continue
        if p % 2 == 0:  # only for H ≡ 7 (mod 8); cannot be an odd prime
            continue
        if jacobi_symbol(-config.H, p) != 1:
            continue
        if miller_rabin(p, config.mr_rounds, rng).verdict is Verdict.COMPOSITE:
            continue
        return StructuredPrime(Z=Z, k=k, bk=bk, p=p)
    raise ExhaustedAttempts(
        f"no structured prime of >= {config.min_bits} bits within "
        f"{config.max_attempts} attempts")


def generate_keypair(config: KeygenConfig,
                     rng: random.Random | None = None) -> StructuredKeyPair:
    """Two distinct structured primes and the public modulus N = p1 * p2.

    Only the second prime is regenerated on a collision, preserving the
    original control flow.
    """
    rng = rng if rng is not None else random.Random(config.rng_seed)
    sp1 = generate_structured_prime(config, rng)
    sp2 = generate_structured_prime(config, rng)
    while sp1.p == sp2.p:
        sp2 = generate_structured_prime(config, rng)
    return StructuredKeyPair(sp1=sp1, sp2=sp2, N=sp1.p * sp2.p, H=config.H)


def recover_zk(p: int, H: int) -> int:
    """Invert p = ((2*Zk - 1)^2 + H)/4 to the product Zk = (sqrt(4p-H)+1)/2.

    Only the product comes back, never the (Z, k) split. Raises
    NotStructured when 4p - H is not an odd perfect square.
    """
    validate_heegner(H)
    if 4 * p - H < 0:
        raise ValueError(f"4p - H is negative for p={p}, H={H}")
    s = integer_sqrt(4 * p - H)
    if s * s != 4 * p - H or s % 2 == 0:
        raise NotStructured(f"4p - H = {4 * p - H} is not an odd perfect square")
    return (s + 1) // 2


def rsa_roundtrip(keypair: StructuredKeyPair, message: int,
                  e: int = 65537) -> tuple[int, int]:
    """Textbook RSA demo: returns (ciphertext, recovered plaintext)."""
    if not 0 <= message < keypair.N:
        raise ValueError(f"message must lie in [0, N), got {message}")
    phi = (keypair.sp1.p - 1) * (keypair.sp2.p - 1)
    if math.gcd(e, phi) != 1:
        raise ExponentNotCoprime(f"e={e} shares a factor with phi(N)")
    d = pow(e, -1, phi)
    c = pow(message, e, keypair.N)
    return c, pow(c, d, keypair.N)


def baseline_random_prime(bits: int, rng: random.Random | None = None) -> int:
    """Timing baseline: uniform odd candidates of exactly `bits` bits,
    retried until 40-round Miller-Rabin passes."""
    if bits < 8:
        raise ValueError(f"bits must be >= 8, got {bits}")
    rng = rng if rng is not None else random.Random()
    while True:
        cand = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if miller_rabin(cand, 40, rng).verdict is not Verdict.COMPOSITE:
            return cand


_SECRET_FIELDS = ("Z1", "k1", "p1", "Z2", "k2", "p2")


def serialize_keypair(keypair: StructuredKeyPair, include_secrets: bool) -> bytes:
    """JSON key document; every big integer is a decimal string.

    Public form carries exactly {H, N}; the secret form adds
    {Z1, k1, p1, Z2, k2, p2}.
    """
    doc: dict = {"H": keypair.H, "N": str(keypair.N)}
    if include_secrets:
        for name, value in zip(_SECRET_FIELDS,
                               (keypair.sp1.Z, keypair.sp1.k, keypair.sp1.p,
                                keypair.sp2.Z, keypair.sp2.k, keypair.sp2.p)):
            doc[name] = str(value)
    return (json.dumps(doc, indent=2) + "\n").encode()


def deserialize_keypair(data: bytes) -> StructuredKeyPair:
    """Load a secret-form key document, re-deriving bk and validating every
    structural invariant (p_i = (bk_i^2 + H)/4, N = p1 * p2, p1 != p2)."""
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("key document must be a JSON object")
    missing = [f for f in ("H", "N", *_SECRET_FIELDS) if f not in doc]
    if missing:
        raise MissingField(f"key document lacks fields: {', '.join(missing)}")
    try:
        H = int(doc["H"])
        N = int(doc["N"])
        Z1, k1, p1, Z2, k2, p2 = (int(doc[f]) for f in _SECRET_FIELDS)
        validate_heegner(H)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad field in key document: {exc}") from exc
    primes = []
    for Z, k, p in ((Z1, k1, p1), (Z2, k2, p2)):
        bk = 2 * Z * k - 1
        if (bk * bk + H) % 4 != 0 or (bk * bk + H) // 4 != p:
            raise ParseError(f"p={p} is not (bk^2 + {H})/4 for its (Z, k)")
        primes.append(StructuredPrime(Z=Z, k=k, bk=bk, p=p))
    if primes[0].p == primes[1].p:
        raise ParseError("the two structured primes must be distinct")
    if primes[0].p * primes[1].p != N:
        raise ParseError("N does not equal p1 * p2")
    return StructuredKeyPair(sp1=primes[0], sp2=primes[1], N=N, H=H)
