"""Heuristic prime-density analytics for the family: the local-root Euler
product, the logarithmic integral, expected prime counts, and the
quadratic-residue shortcut that estimates the product from a census
imbalance.

Conventions, pinned because each was resolved against the source arithmetic:

* exact_constant returns the truncated Euler product over p <= cutoff,
  DIVIDED BY the polynomial degree 2. The conjecture's count asymptotic
  carries a 1/deg normalization, and every reference value near 3.32 is
  stated on that normalized scale (the raw product at cutoff 1e6 is 6.6408,
  exactly twice the reference values).
* expected_count_simple and expected_count_sum use the NATURAL log
  (3.3204 * 200/ln 200 = 125.34 reproduces the reference).
* approx_constant uses a BASE-10 double log: the documented factors
  39.75528632 (x=6361), 39.77688088 (x=9941) and 39.81914903 (x=25471)
  equal log10(log10 x) + 39.1751 to eight decimals, while ln(ln x) is
  about 2.17 and cannot produce them. The 39.1751 offset is a fitted
  constant on that scale; the classical Euler-Mascheroni gamma it stands
  in for is kept below for reference only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

from .errors import DomainError, NotPrime, ValueTooSmall
from .polynomial import QuadraticPolynomial, validate_heegner
from .primality import is_prime, jacobi_symbol, sieve

EULER_MASCHERONI = 0.5772156649  # reference only; not used in computation
FITTED_LOGLOG_OFFSET = 39.1751   # the fitted offset used by approx_constant
DEFAULT_CUTOFF = 10**6

_POLY_DEGREE = 2
_BRUTE_FORCE_PRIME_BOUND = 13


@dataclass(frozen=True)
class ExactProduct:
    cutoff: int


@dataclass(frozen=True)
class DeltaApprox:
    delta_p: float
    x: int


@dataclass(frozen=True)
class BatemanHornEstimate:
    constant: float
    method: ExactProduct | DeltaApprox
    expected_count: float | None = None
    range: tuple[int, int] | None = None

    def __post_init__(self):
        # constant == 0 happens for H = 7, whose members are even-valued
        if self.constant < 0:
            raise ValueError(f"constant must be nonnegative, got {self.constant}")
        if isinstance(self.method, ExactProduct) and self.method.cutoff < 10**3:
            raise ValueError(f"product cutoff must be >= 1000, got {self.method.cutoff}")


@dataclass(frozen=True)
class ResidueCensus:
    H: int
    x: int
    qr_count: int
    nqr_count: int
    delta_p: float

    def __post_init__(self):
        if not 0.0 <= self.delta_p <= 1.0:
            raise ValueError(f"delta_p out of [0, 1]: {self.delta_p}")


def _omega_unchecked(poly: QuadraticPolynomial, p: int) -> int:
    if p <= _BRUTE_FORCE_PRIME_BOUND:
        return sum(1 for n in range(p) if poly.evaluate(n) % p == 0)
    if poly.H % p == 0:
        return 1  # discriminant ≡ 0 mod p: double root
    return 1 + jacobi_symbol(-poly.H, p)


def omega(poly: QuadraticPolynomial, p: int) -> int:
    """Number of distinct roots of the polynomial mod p, in {0, 1, 2}.

    Brute-force evaluation for p <= 13 (the Legendre shortcut assumes an odd
    prime not dividing the discriminant); 1 + (-H/p) otherwise, or 1 when
    p divides H.
    """
    if not is_prime(p):
        raise NotPrime(f"omega needs a prime modulus, got {p}")
    return _omega_unchecked(poly, p)


def exact_constant(poly: QuadraticPolynomial, cutoff: int = DEFAULT_CUTOFF) -> BatemanHornEstimate:
    """Degree-normalized truncated Euler product
    (1/2) * prod_{p <= cutoff} (1 - omega(p)/p) / (1 - 1/p).

    Accumulated in log space. Returns 0 when some factor vanishes
    (omega(p) = p, which occurs only as omega(2) = 2 for even-valued
    members, i.e. H = 7).
    """
    if cutoff < 10**3:
        raise ValueError(f"cutoff must be >= 1000, got {cutoff}")
    log_acc = 0.0
    for p in sieve(cutoff):
        w = _omega_unchecked(poly, p)
        if w == p:
            return BatemanHornEstimate(0.0, ExactProduct(cutoff))
        log_acc += math.log1p(-w / p) - math.log1p(-1 / p)
    return BatemanHornEstimate(math.exp(log_acc) / _POLY_DEGREE, ExactProduct(cutoff))


def logarithmic_integral(x: float) -> float:
    """Li(x) = integral of dt/ln t from 2 to x (relative error <= 1e-6)."""
    if x < 2:
        raise DomainError(f"logarithmic_integral needs x >= 2, got {x}")
    if x == 2:
        return 0.0
    value, _ = quad(lambda t: 1.0 / math.log(t), 2.0, x, limit=200)
    return value


def expected_count_simple(C_f: float, N: float) -> float:
    """Prime-count heuristic C_f * N / ln N."""
    if N < 3:
        raise ValueError(f"N must be >= 3, got {N}")
    return C_f * N / math.log(N)


def expected_count_sum(poly: QuadraticPolynomial, C_f: float,
                       n_lo: int, n_hi: int) -> float:
    """Termwise heuristic sum_{n=n_lo}^{n_hi} C_f / ln f(n) (natural log).

    Linear in C_f; a single-term range [n, n] gives C_f / ln f(n). Raises
    ValueTooSmall if some f(n) < 3 (ln too close to 0 for the heuristic).
    """
    if n_lo > n_hi:
        raise ValueError(f"empty range [{n_lo}, {n_hi}]")
    total = 0.0
    for n in range(n_lo, n_hi + 1):
        v = poly.evaluate(n)
        if v < 3:
            raise ValueTooSmall(f"f({n}) = {v} < 3")
        total += C_f / math.log(v)
    return total


def residue_census(H: int, x: int) -> ResidueCensus:
    """Classify (-H/p) for every odd prime p <= x with p not dividing H,
    and report the normalized imbalance delta_p = |QR - NQR| / (QR + NQR)."""
    validate_heegner(H)
    if x < 3:
        raise ValueError(f"census bound must be >= 3, got {x}")
    qr = nqr = 0
    for p in sieve(x):
        if p == 2 or H % p == 0:
            continue
        if jacobi_symbol(-H, p) == 1:
            qr += 1
        else:
            nqr += 1
    delta = abs(qr - nqr) / (qr + nqr) if qr + nqr else 0.0
    return ResidueCensus(H=H, x=x, qr_count=qr, nqr_count=nqr, delta_p=delta)


def approx_constant(delta_p: float, x: int) -> BatemanHornEstimate:
    """Census shortcut exp(delta_p * (log10(log10 x) + 39.1751)).

    Both logs are base 10 (see the module docstring); x must exceed 10 so
    the inner double log is defined and positive.
    """
    if x <= 10:
        raise DomainError(f"approx_constant needs x > 10, got {x}")
    if delta_p < 0:
        raise ValueError(f"delta_p must be nonnegative, got {delta_p}")
    factor = math.log10(math.log10(x)) + FITTED_LOGLOG_OFFSET
    return BatemanHornEstimate(math.exp(delta_p * factor), DeltaApprox(delta_p, x))


@dataclass(frozen=True)
class RichnessReport:
    actual: int
    expected: float
    ratio: float


def richness_report(poly: QuadraticPolynomial, n_lo: int, n_hi: int,
                    cutoff: int = DEFAULT_CUTOFF) -> RichnessReport:
    """Actual primes over [n_lo, n_hi] versus the termwise expected count
    built from exact_constant at the given cutoff."""
    from .density import scan  # local import to avoid a cycle

    actual = scan(poly, n_lo, n_hi).prime_count
    estimate = exact_constant(poly, cutoff)
    expected = expected_count_sum(poly, estimate.constant, n_lo, n_hi)
    return RichnessReport(actual=actual, expected=expected, ratio=actual / expected)
