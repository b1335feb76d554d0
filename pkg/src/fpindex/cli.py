"""Command-line front end.

Exit codes: 0 success or a true query, 1 a false query, 2 any error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .errors import FingerprintError, UnknownFingerprint
from .fingerprint_index import BUILDERS, METHODS, build_index
from .oracle import DEFAULT_CAP, gen_wk, oracle_all
from .serialization import load, save, to_json

SEED_ENV = "FPINDEX_SEED"


class CliError(Exception):
    pass


def _seed(value):
    if value is not None:
        return value
    env = os.environ.get(SEED_ENV)
    if env in (None, ""):
        return None
    try:
        return int(env)
    except ValueError:
        raise CliError(f"{SEED_ENV} must be an integer, got {env!r}")


def _read_input(path: str) -> bytes:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc.strerror}")
    if not data:
        raise CliError("input is empty")
    return data


def _parse_set(text: str) -> bytes:
    items = [x for x in text.split(",") if x != ""]
    if not items:
        raise CliError("empty query set")
    out = bytearray()
    for x in items:
        b = x.encode("utf-8")
        if len(b) != 1:
            raise CliError(f"set members must be single characters, got {x!r}")
        out += b
    return bytes(out)


def _load(path: str):
    try:
        return load(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}")


def cmd_build(args) -> int:
    data = _read_input(args.input)
    ix = build_index(data, builder=args.builder, seed=_seed(args.seed), method=args.method)
    try:
        save(ix, args.out)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc.strerror}")
    print(f"{len(ix)} fingerprints, {ix.location_count()} maximal locations -> {args.out}",
          file=sys.stderr)
    return 0


def cmd_exists(args) -> int:
    ix = _load(args.index)
    hit = ix.query_exists(_parse_set(args.set))
    print("true" if hit else "false")
    return 0 if hit else 1


def cmd_report(args) -> int:
    ix = _load(args.index)
    query = _parse_set(args.set)
    try:
        if args.raw_coords:
            locs = ix.query_report_raw(query)
        else:
            locs = [(loc.i, loc.j) for loc in ix.query_report(query)]
    except UnknownFingerprint:
        raise CliError("unknown fingerprint")
    for i, j in locs:
        print(f"{i}\t{j}")
    return 0


def cmd_stats(args) -> int:
    data = _read_input(args.input)
    seed = _seed(args.seed)
    t0 = time.perf_counter()
    ix = build_index(data, builder=args.builder, seed=seed)
    elapsed = time.perf_counter() - t0
    report = {
        "n": ix.seq.n,
        "raw_length": ix.seq.raw_length,
        "sigma": ix.seq.sigma,
        "fingerprints": len(ix),
        "maximal_locations": ix.location_count(),
        "copy_classes": None,
        "builder": args.builder,
        "build_seconds": round(elapsed, 6),
        "seed": seed,
    }
    status = 0
    if args.verify:
        truth = oracle_all(ix.seq, cap=args.cap)
        report["copy_classes"] = truth.copy_class_count
        ok = (len(truth.F) == len(ix) and len(truth.L) == ix.location_count()
              and set(truth.F) == set(ix.fingerprints()))
        report["verified"] = ok
        status = 0 if ok else 2
    print(json.dumps(report))
    return status


def cmd_genwk(args) -> int:
    sys.stdout.buffer.write(gen_wk(args.k))
    sys.stdout.buffer.flush()
    return 0


def cmd_dump(args) -> int:
    print(json.dumps(to_json(_load(args.index)), indent=1))
    return 0


def cmd_compare(args) -> int:
    data = _read_input(args.input)
    seed = _seed(args.seed)
    parts = {}
    for b in BUILDERS:
        ix = build_index(data, builder=b, seed=seed)
        parts[b] = {f: sorted(ix.query_report(f.symbols(ix.alphabet))) for f in ix.fingerprints()}
    same = all(p == parts["exact"] for p in parts.values())
    print(json.dumps({b: len(p) for b, p in parts.items()} | {"identical": same}))
    return 0 if same else 1


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fpindex", description="Fingerprint index over a byte file.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("build", help="build and serialize an index")
    p.add_argument("input")
    p.add_argument("--builder", choices=BUILDERS, default="exact")
    p.add_argument("--seed", type=int)
    p.add_argument("--method", choices=METHODS, default="bits")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build)

    for name, func, help_ in (("exists", cmd_exists, "is a character set a fingerprint"),
                              ("report", cmd_report, "list maximal locations of a set")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("index")
        p.add_argument("--set", required=True, help='comma-separated characters, e.g. "a,c"')
        if name == "report":
            p.add_argument("--raw-coords", action="store_true",
                           help="coordinates in the input before run collapsing")
        p.set_defaults(func=func)

    p = sub.add_parser("stats", help="print index statistics as JSON")
    p.add_argument("input", help='file path or "-" for stdin')
    p.add_argument("--builder", choices=BUILDERS, default="exact")
    p.add_argument("--seed", type=int)
    p.add_argument("--verify", action="store_true", help="cross-check with the brute-force oracle")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="oracle size cap")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gen-wk", help="write the word w_k")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_genwk)

    p = sub.add_parser("dump", help="print an index file as JSON")
    p.add_argument("index")
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("compare", help="check that all builders agree")
    p.add_argument("input")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_compare)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, FingerprintError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
