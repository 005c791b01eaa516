"""Pick the Z*k that maximizes prime production over [n_lo, n_hi].

The closed form places the parabola's vertex at the range midpoint:
Zk = (n_lo + n_hi + 1) / 2, floored (and also rounded up when fractional).
That heuristic pick is returned as-is; sweep_verify scans a window around
it so the empirical maximum can be compared side by side (the two need not
agree, and for [0, 99] they do not: 92 at the heuristic 50 versus 95 in
the 35..40 and 60..65 bands).
"""

from __future__ import annotations

from dataclasses import dataclass

from .density import scan
from .errors import InvalidRange
from .polynomial import from_product


@dataclass(frozen=True)
class OptimizationResult:
    n_lo: int
    n_hi: int
    candidates: tuple[int, ...]
    best: tuple[int, int]  # (Zk, prime_count), ties broken toward smaller Zk
    sweep: tuple[tuple[int, int], ...] | None = None


def optimal_zk(n_lo: int, n_hi: int) -> list[int]:
    """Heuristic Z*k candidates for the range: [(s)//2] when s = n_lo+n_hi+1
    is even, else floor and round-half-up, i.e. [s//2, s//2 + 1]."""
    if not 0 <= n_lo < n_hi:
        raise InvalidRange(f"need 0 <= n_lo < n_hi, got [{n_lo}, {n_hi}]")
    s = n_lo + n_hi + 1
    if s % 2 == 0:
        return [s // 2]
    return [s // 2, s // 2 + 1]


def evaluate_candidates(n_lo: int, n_hi: int, H: int,
                        candidates: list[int]) -> OptimizationResult:
    """Scan each candidate's polynomial over [n_lo, n_hi] and pick the best
    count (smaller Zk wins ties)."""
    if n_lo > n_hi:
        raise InvalidRange(f"need n_lo <= n_hi, got [{n_lo}, {n_hi}]")
    if not candidates:
        raise InvalidRange("no candidates to evaluate")
    scored = [(zk, scan(from_product(zk, H), n_lo, n_hi).prime_count)
              for zk in candidates]
    best = max(scored, key=lambda t: (t[1], -t[0]))
    return OptimizationResult(n_lo=n_lo, n_hi=n_hi,
                              candidates=tuple(candidates), best=best)


def sweep_verify(n_lo: int, n_hi: int, H: int, window: int) -> list[tuple[int, int]]:
    """Empirical check: prime counts for every Zk within `window` of the
    heuristic center (clamped at 0), sorted by Zk."""
    if window < 0:
        raise ValueError(f"window must be >= 0, got {window}")
    center = (n_lo + n_hi + 1) // 2
    lo = max(0, center - window)
    return [(zk, scan(from_product(zk, H), n_lo, n_hi).prime_count)
            for zk in range(lo, center + window + 1)]
