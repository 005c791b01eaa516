"""Command-line interface.

stdout carries only data (table, json or csv); diagnostics and timings go
to stderr. Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import bateman_horn, channels, density, keygen, optimizer
from .errors import HeegnerForgeError
from .polynomial import FamilyParams, construct, famous_catalog
from .keygen import KeygenConfig, PAPER_RANGE


def _default_threads() -> int:
    env = os.environ.get("HEEGNER_FORGE_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--output-format", choices=("table", "json", "csv"),
                     default="table")
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--threads", type=int, default=_default_threads())


def _emit_json(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _no_csv(args) -> None:
    if args.output_format == "csv":
        raise ValueError("csv output is not defined for this subcommand")


def _cmd_scan(args) -> None:
    params = FamilyParams(Z=args.Z, k=args.k, H=args.H)
    report = density.scan(construct(params), args.n_from, args.n_to, params=params)
    if args.output_format == "table":
        print(f"f(n) = {report.poly}   n in [{report.n_lo}, {report.n_hi}]")
        for r in report.records:
            print(f"{r.n:>8} {r.value:>24} {'prime' if r.is_prime else 'composite'}")
        print(f"primes: {report.prime_count}  composites: {report.composite_count}")
    else:
        sys.stdout.write(density.export_report(report, args.output_format).decode())


def _cmd_sweep(args) -> None:
    rows = density.k_sweep(args.Z, args.H, args.k_from, args.k_to,
                           args.n_from, args.n_to, threads=args.threads)
    if args.output_format == "csv":
        print("k,prime_count")
        for k, count in rows:
            print(f"{k},{count}")
    elif args.output_format == "json":
        _emit_json({"Z": str(args.Z), "H": args.H,
                    "n_lo": args.n_from, "n_hi": args.n_to,
                    "counts": [{"k": k, "prime_count": c} for k, c in rows]})
    else:
        for k, count in rows:
            print(f"k={k:>6}  primes={count}")


def _cmd_constant(args) -> None:
    _no_csv(args)
    poly = construct(FamilyParams(Z=args.Z, k=args.k, H=args.H))
    est = bateman_horn.exact_constant(poly, args.cutoff)
    if args.output_format == "json":
        _emit_json({"A": str(poly.A), "B": str(poly.B), "H": poly.H,
                    "cutoff": args.cutoff, "constant": est.constant})
    else:
        print(f"f(n) = {poly}")
        print(f"constant (product over p <= {args.cutoff}): {est.constant:.7f}")


def _cmd_approx(args) -> None:
    _no_csv(args)
    census = bateman_horn.residue_census(args.H, args.x)
    delta_used = census.delta_p if args.delta_p is None else args.delta_p
    est = bateman_horn.approx_constant(delta_used, args.x)
    doc = {"H": args.H, "x": args.x,
           "qr_count": census.qr_count, "nqr_count": census.nqr_count,
           "computed_delta_p": census.delta_p, "delta_p_used": delta_used,
           "constant": est.constant}
    if args.output_format == "json":
        _emit_json(doc)
    else:
        print(f"census of (-{args.H}/p) over odd primes p <= {args.x}: "
              f"QR={census.qr_count} NQR={census.nqr_count} "
              f"delta={census.delta_p:.6f}")
        print(f"delta used: {delta_used:.6f}  approx constant: {est.constant:.7f}")


def _cmd_richness(args) -> None:
    _no_csv(args)
    poly = construct(FamilyParams(Z=args.Z, k=args.k, H=args.H))
    rep = bateman_horn.richness_report(poly, args.n_from, args.n_to, args.cutoff)
    if args.output_format == "json":
        _emit_json({"A": str(poly.A), "B": str(poly.B), "H": poly.H,
                    "n_lo": args.n_from, "n_hi": args.n_to, "cutoff": args.cutoff,
                    "actual": rep.actual, "expected": rep.expected,
                    "ratio": rep.ratio})
    else:
        print(f"f(n) = {poly}   n in [{args.n_from}, {args.n_to}]")
        print(f"actual primes:   {rep.actual}")
        print(f"expected primes: {rep.expected:.2f}")
        print(f"ratio:           {rep.ratio:.3f}")


def _cmd_optimize(args) -> None:
    _no_csv(args)
    candidates = optimizer.optimal_zk(args.n_from, args.n_to)
    result = optimizer.evaluate_candidates(args.n_from, args.n_to, args.H, candidates)
    sweep = None
    if args.sweep_window is not None:
        sweep = optimizer.sweep_verify(args.n_from, args.n_to, args.H,
                                       args.sweep_window)
    if args.output_format == "json":
        doc = {"n_lo": args.n_from, "n_hi": args.n_to, "H": args.H,
               "candidates": [str(c) for c in result.candidates],
               "scored": [{"Zk": str(zk),
                           "prime_count": density.scan(
                               construct(FamilyParams(1, zk, args.H)),
                               args.n_from, args.n_to).prime_count}
                          for zk in result.candidates],
               "best": {"Zk": str(result.best[0]), "prime_count": result.best[1]}}
        if sweep is not None:
            best_zk, best_count = max(sweep, key=lambda t: (t[1], -t[0]))
            doc["sweep"] = [{"Zk": str(zk), "prime_count": c} for zk, c in sweep]
            doc["empirical_best"] = {"Zk": str(best_zk), "prime_count": best_count}
        _emit_json(doc)
    else:
        print(f"heuristic Zk candidates for [{args.n_from}, {args.n_to}]: "
              f"{list(result.candidates)}")
        print(f"heuristic best: Zk={result.best[0]} with {result.best[1]} primes")
        if sweep is not None:
            best_zk, best_count = max(sweep, key=lambda t: (t[1], -t[0]))
            print(f"empirical best in window {args.sweep_window}: "
                  f"Zk={best_zk} with {best_count} primes")


def _cmd_keygen(args) -> None:
    _no_csv(args)
    config = KeygenConfig(H=args.H, min_bits=args.min_bits,
                          z_range=(args.z_lo, args.z_hi),
                          k_range=(args.k_lo, args.k_hi),
                          max_attempts=args.max_attempts,
                          mr_rounds=1 if args.paper_faithful else args.mr_rounds,
                          rng_seed=args.seed)
    t0 = time.perf_counter()
    pair = keygen.generate_keypair(config)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    print(f"keypair generated in {elapsed_ms:.2f} ms "
          f"(p1: {pair.sp1.p.bit_length()} bits, p2: {pair.sp2.p.bit_length()} bits, "
          f"N: {pair.N.bit_length()} bits)", file=sys.stderr)
    secret = keygen.serialize_keypair(pair, include_secrets=True)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(secret)
        sys.stdout.write(keygen.serialize_keypair(pair, include_secrets=False).decode())
    else:
        sys.stdout.write(secret.decode())


def _cmd_recover(args) -> None:
    _no_csv(args)
    zk = keygen.recover_zk(args.p, args.H)
    if args.output_format == "json":
        _emit_json({"p": str(args.p), "H": args.H, "Zk": str(zk)})
    else:
        print(f"Zk = {zk}")


def _cmd_channels(args) -> None:
    plan = channels.build_plan(args.n2, args.H)
    report = channels.frequency_report(plan)
    if args.output_format == "json":
        _emit_json({"n2": plan.n2, "H": plan.H, "Zk": plan.zk,
                    "poly": {"A": str(plan.poly.A), "B": str(plan.poly.B)},
                    "pairs": [{"channels": list(pair), "frequency": str(freq),
                               "is_prime": prime}
                              for pair, freq, prime in report]})
    elif args.output_format == "csv":
        print("channel_a,channel_b,frequency,is_prime")
        for (a, b), freq, prime in report:
            print(f"{a},{b},{freq},{'true' if prime else 'false'}")
    else:
        print(f"n2={plan.n2}  Zk={plan.zk}  f(n) = {plan.poly}")
        for (a, b), freq, prime in report:
            print(f"({a:>4}, {b:>4}) -> {freq}"
                  + ("" if prime else "  [composite]"))


def _cmd_catalog(args) -> None:
    entries = famous_catalog()
    if args.output_format == "json":
        _emit_json([{"name": name,
                     "Z": str(params.Z), "k": str(params.k), "H": params.H,
                     "A": str(poly.A), "B": str(poly.B)}
                    for name, params, poly in entries])
    elif args.output_format == "csv":
        print("name,Z,k,H,A,B")
        for name, params, poly in entries:
            print(f"{name},{params.Z},{params.k},{params.H},{poly.A},{poly.B}")
    else:
        for name, params, poly in entries:
            print(f"{name:<10} (Zk={params.zk}, H={params.H})  f(n) = {poly}")


def _cmd_baseline(args) -> None:
    _no_csv(args)
    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    p = keygen.baseline_random_prime(args.bits, rng)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    print(f"baseline prime generated in {elapsed_ms:.2f} ms", file=sys.stderr)
    if args.output_format == "json":
        _emit_json({"bits": p.bit_length(), "prime": str(p)})
    else:
        print(f"{p} ({p.bit_length()} bits)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heegner-forge",
        description="Prime-rich quadratic family: scans, density analytics, "
                    "structured keygen, channel plans.")
    subs = parser.add_subparsers(dest="command", required=True)

    def sub(name, func, **kwargs):
        s = subs.add_parser(name, **kwargs)
        _common_flags(s)
        s.set_defaults(func=func)
        return s

    s = sub("scan", _cmd_scan, help="evaluate one member over an n range")
    s.add_argument("--Z", type=int, default=1)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--H", type=int, default=163)
    s.add_argument("--from", dest="n_from", type=int, required=True)
    s.add_argument("--to", dest="n_to", type=int, required=True)

    s = sub("sweep", _cmd_sweep, help="prime count per k over a fixed n range")
    s.add_argument("--Z", type=int, default=1)
    s.add_argument("--H", type=int, default=163)
    s.add_argument("--k-from", dest="k_from", type=int, required=True)
    s.add_argument("--k-to", dest="k_to", type=int, required=True)
    s.add_argument("--n-from", dest="n_from", type=int, required=True)
    s.add_argument("--n-to", dest="n_to", type=int, required=True)

    s = sub("constant", _cmd_constant, help="truncated Euler product")
    s.add_argument("--Z", type=int, default=1)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--H", type=int, default=163)
    s.add_argument("--cutoff", type=int, default=bateman_horn.DEFAULT_CUTOFF)

    s = sub("approx", _cmd_approx, help="residue census and double-log estimate")
    s.add_argument("--H", type=int, default=163)
    s.add_argument("--x", type=int, required=True)
    s.add_argument("--delta-p", dest="delta_p", type=float, default=None)

    s = sub("richness", _cmd_richness, help="actual versus expected primes")
    s.add_argument("--Z", type=int, default=1)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--H", type=int, default=163)
    s.add_argument("--from", dest="n_from", type=int, required=True)
    s.add_argument("--to", dest="n_to", type=int, required=True)
    s.add_argument("--cutoff", type=int, default=bateman_horn.DEFAULT_CUTOFF)

    s = sub("optimize", _cmd_optimize, help="Zk maximizing prime production")
    s.add_argument("--from", dest="n_from", type=int, required=True)
    s.add_argument("--to", dest="n_to", type=int, required=True)
    s.add_argument("--H", type=int, default=163)
    s.add_argument("--sweep-window", dest="sweep_window", type=int, default=None)

    s = sub("keygen", _cmd_keygen, help="structured keypair generation")
    s.add_argument("--H", type=int, default=163)
    s.add_argument("--min-bits", dest="min_bits", type=int, default=200)
    s.add_argument("--z-lo", dest="z_lo", type=int, default=PAPER_RANGE[0])
    s.add_argument("--z-hi", dest="z_hi", type=int, default=PAPER_RANGE[1])
    s.add_argument("--k-lo", dest="k_lo", type=int, default=PAPER_RANGE[0])
    s.add_argument("--k-hi", dest="k_hi", type=int, default=PAPER_RANGE[1])
    s.add_argument("--max-attempts", dest="max_attempts", type=int, default=10000)
    s.add_argument("--mr-rounds", dest="mr_rounds", type=int, default=40)
    s.add_argument("--paper-faithful", action="store_true",
                   help="single Miller-Rabin round (not safe for real keys)")
    s.add_argument("--out", default=None, help="write the secret key file here")

    s = sub("recover", _cmd_recover, help="recover the Zk product from p and H")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--H", type=int, default=163)

    s = sub("channels", _cmd_channels, help="mirrored channel frequency plan")
    s.add_argument("--n2", type=int, required=True)
    s.add_argument("--H", type=int, default=163)

    sub("catalog", _cmd_catalog, help="historic members of the family")

    s = sub("baseline", _cmd_baseline, help="naive random prime (timing baseline)")
    s.add_argument("--bits", type=int, required=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (HeegnerForgeError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
