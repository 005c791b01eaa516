"""Symmetric channel-to-frequency allocation.

For odd n2, the member with Zk = (n2 + 1)/2 has A = n2, so f(n) = f(n2 - n)
and the channels n and n2 - n share the carrier index f(n). f is strictly
decreasing on the half-range [0, (n2-1)/2], so distinct pairs get distinct
frequencies, and odd n2 rules out a self-paired channel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ChannelOutOfRange, EvenUpperIndex
from .polynomial import QuadraticPolynomial, from_product
from .primality import is_prime


@dataclass(frozen=True)
class ChannelPlan:
    n2: int
    zk: int
    H: int
    poly: QuadraticPolynomial
    entries: dict[int, int]                       # channel n -> frequency f(n)
    pairs: tuple[tuple[tuple[int, int], int], ...]  # ((n, n2-n), frequency)


def build_plan(n2: int, H: int) -> ChannelPlan:
    """Allocate frequencies for channels 0..n2 (n2 odd)."""
    if n2 < 1 or n2 % 2 == 0:
        raise EvenUpperIndex(f"n2 must be an odd positive integer, got {n2}")
    zk = (n2 + 1) // 2
    poly = from_product(zk, H)
    entries = {n: poly.evaluate(n) for n in range(n2 + 1)}
    pairs = tuple(((n, n2 - n), entries[n]) for n in range((n2 - 1) // 2 + 1))
    freqs = [f for _, f in pairs]
    if len(set(freqs)) != len(freqs):
        raise AssertionError("pair frequencies must be pairwise distinct")
    return ChannelPlan(n2=n2, zk=zk, H=H, poly=poly, entries=entries, pairs=pairs)


def mirror_channel(plan: ChannelPlan, n: int) -> int:
    """The partner channel n2 - n sharing n's frequency."""
    if not 0 <= n <= plan.n2:
        raise ChannelOutOfRange(f"channel {n} outside [0, {plan.n2}]")
    return plan.n2 - n


def frequency_report(plan: ChannelPlan) -> list[tuple[tuple[int, int], int, bool]]:
    """Per-pair (channels, frequency, frequency is prime).

    Composite frequencies are flagged, not rejected; the allocation never
    requires every value to be prime.
    """
    return [(pair, freq, is_prime(freq)) for pair, freq in plan.pairs]
