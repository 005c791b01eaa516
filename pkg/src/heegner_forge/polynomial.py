"""The prime-rich quadratic family f(n) = n^2 - A*n + B with A = 2*Z*k - 1
and B = (A^2 + H)/4 for a Heegner number H.

The discriminant is A^2 - 4B = -H, so every member is positive on the
integers (minimum (H+1)/4) and symmetric about A/2. All arithmetic is exact:
plain Python ints, Fraction for the half-integer axis, and the radicand H
kept as an integer instead of a floating sqrt.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralConstant

HEEGNER_NUMBERS = frozenset({1, 2, 3, 7, 11, 19, 43, 67, 163})

# H = 1 and H = 2 make (A^2 + H)/4 non-integral for odd A; only these seven
# values yield family members.
CONSTRUCTIBLE_HEEGNER = frozenset({3, 7, 11, 19, 43, 67, 163})


def validate_heegner(H: int) -> int:
    if H not in HEEGNER_NUMBERS:
        raise ValueError(f"H={H} is not a Heegner number {sorted(HEEGNER_NUMBERS)}")
    return H


@dataclass(frozen=True)
class FamilyParams:
    """Family coordinates: nonnegative Z and k (only the product Z*k matters)
    plus a Heegner number H."""

    Z: int
    k: int
    H: int

    def __post_init__(self):
        if self.Z < 0 or self.k < 0:
            raise ValueError(f"Z and k must be nonnegative, got Z={self.Z}, k={self.k}")
        validate_heegner(self.H)

    @property
    def zk(self) -> int:
        return self.Z * self.k


@dataclass(frozen=True)
class QuadraticPolynomial:
    """n^2 - A*n + B with odd A and 4B = A^2 + H exactly."""

    A: int
    B: int
    H: int

    def __post_init__(self):
        validate_heegner(self.H)
        if self.A % 2 == 0:
            raise ValueError(f"A={self.A} must be odd")
        if 4 * self.B != self.A * self.A + self.H:
            raise ValueError(f"4B != A^2 + H for A={self.A}, B={self.B}, H={self.H}")

    def evaluate(self, n: int) -> int:
        return n * n - self.A * n + self.B

    def axis_of_symmetry(self) -> Fraction:
        """Vertex abscissa A/2, exact (always a half-integer)."""
        return Fraction(self.A, 2)

    def mirror_index(self, n: int) -> int:
        """The reflected index A - n; f(n) == f(A - n) identically."""
        return self.A - n

    def complex_roots(self) -> "ComplexRootPair":
        return ComplexRootPair(real_part=Fraction(self.A, 2), imag_magnitude_squared=self.H)

    @property
    def zk(self) -> int:
        """The product Z*k recovered from A = 2*Z*k - 1."""
        return (self.A + 1) // 2

    @property
    def discriminant(self) -> int:
        return self.A * self.A - 4 * self.B

    def __str__(self):
        sign = "-" if self.A > 0 else "+"
        mag = abs(self.A)
        return f"n^2 {sign} {'n' if mag == 1 else f'{mag}n'} + {self.B}"


@dataclass(frozen=True)
class ComplexRootPair:
    """Roots A/2 +- i*sqrt(H)/2, stored exactly as (rational, radicand)."""

    real_part: Fraction
    imag_magnitude_squared: int  # the radicand H; imaginary parts are +-sqrt(H)/2

    def residual(self, poly: QuadraticPolynomial) -> tuple[Fraction, Fraction]:
        """Substitute the root pair into n^2 - A*n + B symbolically.

        Writing a root as x + i*y with x = real_part and y^2 = H/4, the value
        splits into a rational part and a multiple of i*sqrt(H). Returns both
        coefficients; a genuine root pair gives (0, 0).
        """
        x = self.real_part
        y_sq = Fraction(self.imag_magnitude_squared, 4)
        real = x * x - y_sq - poly.A * x + poly.B
        imag_coeff = x - Fraction(poly.A, 2)  # times 2y = sqrt(H)
        return real, imag_coeff


def construct(params: FamilyParams) -> QuadraticPolynomial:
    """Build the family member for (Z, k, H).

    A = 2*Z*k - 1 (so A = -1 when Z*k = 0, Euler's polynomial) and
    B = (A^2 + H)/4. Raises NonIntegralConstant for H in {1, 2}, the two
    Heegner numbers with H !≡ 3 (mod 4).
    """
    A = 2 * params.Z * params.k - 1
    num = A * A + params.H
    if num % 4 != 0:
        raise NonIntegralConstant(
            f"H={params.H} makes (A^2 + H)/4 non-integral; need H ≡ 3 (mod 4)"
        )
    return QuadraticPolynomial(A=A, B=num // 4, H=params.H)


def from_product(zk: int, H: int) -> QuadraticPolynomial:
    """Family member for a bare Z*k product (the Z/k split is immaterial)."""
    return construct(FamilyParams(Z=1, k=zk, H=H))


def euler_rabinowitsch(Delta: int, q: int, alpha: int, x: int) -> int:
    """Evaluate q*x^2 + (alpha-1)*q*x + ((alpha-1)^2*q - Delta)/(4q).

    With q = 1, Delta = -H, alpha = 2*Z*k and x = -n this coincides with
    evaluate(construct(Z, k, H), n); that identity is the family's
    cross-check. Raises NonIntegralConstant when the constant term is not
    an integer.
    """
    if q < 1:
        raise ValueError(f"q must be a positive integer, got {q}")
    num = (alpha - 1) ** 2 * q - Delta
    if num % (4 * q) != 0:
        raise NonIntegralConstant(
            f"constant term ((alpha-1)^2*q - Delta)/(4q) is not integral "
            f"for Delta={Delta}, q={q}, alpha={alpha}"
        )
    return q * x * x + (alpha - 1) * q * x + num // (4 * q)


def famous_catalog() -> list[tuple[str, FamilyParams, QuadraticPolynomial]]:
    """Historical members: Euler, Legendre and Ribenboim, with the (Z, k, H)
    that reproduce their literal coefficients."""
    entries = []
    for name, params in (
        ("Euler", FamilyParams(Z=1, k=0, H=163)),      # n^2 + n + 41
        ("Legendre", FamilyParams(Z=1, k=0, H=67)),    # n^2 + n + 17
        ("Ribenboim", FamilyParams(Z=1, k=40, H=163)), # n^2 - 79n + 1601
    ):
        entries.append((name, params, construct(params)))
    return entries
