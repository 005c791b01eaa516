"""Scan family members over integer ranges and count primes.

Reports capture one record per n; CSV/JSON exports keep arbitrary-precision
values as decimal strings. k-sweeps can fan out over a process pool, with a
deterministic ordered merge.
"""

from __future__ import annotations

import concurrent.futures
import csv
import io
import json
from dataclasses import dataclass

from .errors import EmptyRange, ParseError
from .polynomial import FamilyParams, QuadraticPolynomial, construct
from .primality import is_prime


@dataclass(frozen=True)
class ScanRecord:
    n: int
    value: int
    is_prime: bool


@dataclass(frozen=True)
class ScanReport:
    params: FamilyParams
    n_lo: int
    n_hi: int
    records: tuple[ScanRecord, ...]
    prime_count: int
    composite_count: int

    @property
    def poly(self) -> QuadraticPolynomial:
        return construct(self.params)


def scan(poly: QuadraticPolynomial, n_lo: int, n_hi: int,
         params: FamilyParams | None = None) -> ScanReport:
    """Evaluate poly on every integer in [n_lo, n_hi] and test primality.

    params is recorded in the report; when omitted, the canonical split
    (Z=1, k=Z*k) is derived from A, which reconstructs the same polynomial.
    """
    if n_lo > n_hi:
        raise EmptyRange(f"empty scan range [{n_lo}, {n_hi}]")
    if params is None:
        params = FamilyParams(Z=1, k=poly.zk, H=poly.H)
    records = []
    primes = 0
    for n in range(n_lo, n_hi + 1):
        v = poly.evaluate(n)
        p = is_prime(v)
        primes += p
        records.append(ScanRecord(n=n, value=v, is_prime=p))
    return ScanReport(params=params, n_lo=n_lo, n_hi=n_hi,
                      records=tuple(records), prime_count=primes,
                      composite_count=len(records) - primes)


def _sweep_chunk(args: tuple[int, int, int, int, int, int]) -> list[tuple[int, int]]:
    Z, H, k_lo, k_hi, n_lo, n_hi = args
    out = []
    for k in range(k_lo, k_hi + 1):
        poly = construct(FamilyParams(Z=Z, k=k, H=H))
        count = sum(1 for n in range(n_lo, n_hi + 1) if is_prime(poly.evaluate(n)))
        out.append((k, count))
    return out


def k_sweep(Z: int, H: int, k_lo: int, k_hi: int, n_lo: int, n_hi: int,
            threads: int = 1) -> list[tuple[int, int]]:
    """Prime count per k over the fixed n range, one entry per k.

    threads > 1 splits the k range across a process pool; chunks are merged
    back in k order, so output is identical to the serial run.
    """
    if k_lo > k_hi:
        raise EmptyRange(f"empty k range [{k_lo}, {k_hi}]")
    if n_lo > n_hi:
        raise EmptyRange(f"empty n range [{n_lo}, {n_hi}]")
    if threads <= 1 or k_hi - k_lo < 2 * threads:
        return _sweep_chunk((Z, H, k_lo, k_hi, n_lo, n_hi))
    span = k_hi - k_lo + 1
    step = -(-span // threads)
    chunks = [(Z, H, lo, min(lo + step - 1, k_hi), n_lo, n_hi)
              for lo in range(k_lo, k_hi + 1, step)]
    out: list[tuple[int, int]] = []
    with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_sweep_chunk, chunks):
            out.extend(part)
    return out


def symmetry_check(report: ScanReport) -> bool:
    """True when value(n) == value(A - n) for every n whose mirror also lies
    in the scanned range (vacuously true if no pair overlaps)."""
    if not report.records:
        raise EmptyRange("symmetry_check needs a nonempty report")
    A = report.poly.A
    by_n = {r.n: r.value for r in report.records}
    for n, v in by_n.items():
        m = A - n
        if m in by_n and by_n[m] != v:
            return False
    return True


def merge_reports(reports: list[ScanReport]) -> ScanReport:
    """Merge scans of adjacent disjoint subranges into one report.

    Subranges must tile a contiguous interval and share params; totals are
    recomputed from the concatenated records.
    """
    if not reports:
        raise EmptyRange("nothing to merge")
    parts = sorted(reports, key=lambda r: r.n_lo)
    for prev, nxt in zip(parts, parts[1:]):
        if prev.params != nxt.params:
            raise ValueError("cannot merge reports with different params")
        if prev.n_hi + 1 != nxt.n_lo:
            raise ValueError(
                f"subranges [{prev.n_lo},{prev.n_hi}] and [{nxt.n_lo},{nxt.n_hi}] "
                "are not adjacent")
    records = tuple(r for part in parts for r in part.records)
    primes = sum(r.is_prime for r in records)
    return ScanReport(params=parts[0].params, n_lo=parts[0].n_lo,
                      n_hi=parts[-1].n_hi, records=records,
                      prime_count=primes, composite_count=len(records) - primes)


def export_report(report: ScanReport, format: str) -> bytes:
    """Serialize a report as CSV (columns n,value,is_prime) or JSON.

    JSON mirrors the report fields; Z, k and the polynomial values are
    decimal strings so arbitrary-precision integers survive any parser.
    """
    fmt = format.lower()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "value", "is_prime"])
        for r in report.records:
            writer.writerow([r.n, r.value, "true" if r.is_prime else "false"])
        return buf.getvalue().encode()
    if fmt == "json":
        doc = {
            "params": {"Z": str(report.params.Z), "k": str(report.params.k),
                       "H": report.params.H},
            "n_lo": report.n_lo,
            "n_hi": report.n_hi,
            "prime_count": report.prime_count,
            "composite_count": report.composite_count,
            "records": [{"n": r.n, "value": str(r.value), "is_prime": r.is_prime}
                        for r in report.records],
        }
        return (json.dumps(doc, indent=2) + "\n").encode()
    raise ValueError(f"unknown format {format!r}; expected 'csv' or 'json'")


def parse_report(data: bytes) -> ScanReport:
    """Inverse of export_report(..., 'json')."""
    try:
        doc = json.loads(data)
        params = FamilyParams(Z=int(doc["params"]["Z"]), k=int(doc["params"]["k"]),
                              H=int(doc["params"]["H"]))
        records = tuple(ScanRecord(n=int(r["n"]), value=int(r["value"]),
                                   is_prime=bool(r["is_prime"]))
                        for r in doc["records"])
        report = ScanReport(params=params, n_lo=int(doc["n_lo"]), n_hi=int(doc["n_hi"]),
                            records=records, prime_count=int(doc["prime_count"]),
                            composite_count=int(doc["composite_count"]))
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise ParseError(f"malformed scan report: {exc}") from exc
    if report.prime_count + report.composite_count != len(records):
        raise ParseError("record counts do not add up")
    return report
