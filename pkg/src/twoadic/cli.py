"""Command-line front end.

    twoadic gen --family twoprime --p 3 --out s.bits
    twoadic gen --family gmw --k 2 --out a.bits
    twoadic autocorr --in s.bits
    twoadic complexity --in s.bits
    twoadic approx --in s.bits --prefix-len 32
    twoadic verify --all

Exit codes: 0 success (all reports pass), 1 verification failure, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import bitseq
from .adic import two_adic_profile
from .constructions import GmwParams, TwoPrimeParams, build_gmw_modified, build_two_prime_modified
from .fcsr import approximate, expand, periodic_prefix, security_margin
from .verify import CLAIMS, build_cells, run_cells

log = logging.getLogger("twoadic")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return int(lo), int(lo)
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj))
        return
    for key, value in obj.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value)
        print(f"{key}: {value}")


def _load(args) -> bitseq.BitSequence:
    if not args.input:
        raise UsageError("--in is required")
    try:
        return bitseq.read_sequence(args.input)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None


def cmd_gen(args) -> int:
    if args.family == "twoprime":
        if args.p is None:
            raise UsageError("--p is required for the twoprime family")
        params = TwoPrimeParams(args.p)
        s = build_two_prime_modified(params)
        provenance = {"family": "twoprime", "p": params.p, "pair": [params.p, params.p + 2]}
    else:
        if args.k is None:
            raise UsageError("--k is required for the gmw family")
        modulus = int(args.modulus, 16) if args.modulus else None
        s, prov = build_gmw_modified(GmwParams(args.k, long_modulus=modulus))
        provenance = {"family": "gmw", **prov.as_dict()}
    provenance["n"] = s.period

    text = bitseq.to_json(s) + "\n" if args.format == "json" else bitseq.dumps(s)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(json.dumps(provenance))
    else:
        sys.stdout.write(text)
        print(json.dumps(provenance), file=sys.stderr)
    return EXIT_OK


def cmd_autocorr(args) -> int:
    s = _load(args)
    spec = bitseq.autocorrelation_spectrum(s)
    _emit(
        {
            "n": s.period,
            "values": list(spec.values),
            "histogram": {str(v): c for v, c in spec.histogram().items()},
        },
        args.format,
    )
    return EXIT_OK


def cmd_complexity(args) -> int:
    s = _load(args)
    report = two_adic_profile(s).as_dict()
    report["required_prefix_bits"] = security_margin(s).required_prefix_bits
    _emit(report, args.format)
    return EXIT_OK


def cmd_approx(args) -> int:
    s = _load(args)
    length = args.prefix_len if args.prefix_len is not None else 2 * s.period + 2
    if length < 1:
        raise UsageError("--prefix-len must be positive")
    prefix = periodic_prefix(s, length)
    ra = approximate(prefix)
    report = ra.as_dict()
    report["prefix_len"] = length
    report["verified"] = expand(ra.f, ra.q, length) == prefix
    _emit(report, args.format)
    return EXIT_OK if report["verified"] else EXIT_FAIL


def cmd_verify(args) -> int:
    claims = ["all"] if args.all else (args.claim or ["all"])
    try:
        cells = build_cells(claims, k_range=args.k_range, p_limit=args.p_limit, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    t0 = time.perf_counter()
    reports = run_cells(cells, jobs=args.jobs)
    log.info("%d reports in %.2fs", len(reports), time.perf_counter() - t0)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps({"seed": args.seed, "pass": ok, "reports": [r.as_dict() for r in reports]}))
    else:
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            print(f"{'PASS' if r.passed else 'FAIL'} {r.claim} {params}")
        print(f"seed={args.seed} total={len(reports)} failed={sum(not r.passed for r in reports)}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twoadic", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    gen = sub.add_parser("gen", help="build a sequence from one of the two families")
    gen.add_argument("--family", choices=("gmw", "twoprime"), required=True)
    gen.add_argument("--k", type=int)
    gen.add_argument("--p", type=int)
    gen.add_argument("--modulus", help="hex bit-vector of a primitive degree-2k polynomial (gmw)")
    gen.add_argument("--out")
    gen.add_argument("--format", choices=("bits", "json"), default="bits", help="sequence file format")
    gen.set_defaults(func=cmd_gen)

    for name, func, helptext in (
        ("autocorr", cmd_autocorr, "periodic autocorrelation spectrum"),
        ("complexity", cmd_complexity, "2-adic complexity profile"),
        ("approx", cmd_approx, "rational approximation of a prefix"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--in", dest="input", required=True)
        p.set_defaults(func=func)
        if name == "approx":
            p.add_argument("--prefix-len", type=int)

    ver = sub.add_parser("verify", parents=[common], help="run the verification suite")
    ver.add_argument("--claim", action="append", choices=CLAIMS + ("all",))
    ver.add_argument("--all", action="store_true")
    ver.add_argument("--k-range", type=_parse_range, default=(2, 6))
    ver.add_argument("--p-limit", type=int, default=71)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--jobs", type=int)
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
