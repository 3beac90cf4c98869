"""Command-line entry point.

Exit codes: 0 success / PASS, 1 a valid run with a negative verification
result, 2 bad usage or parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .catalog import coverage, render_coverage
from .errors import HadamardError
from .field import field_of_order
from .hmat import (
    conference_manifest,
    construction_manifest,
    dump_manifest,
    load_manifest,
    read_hmat,
    render,
    reproduce,
    skew_manifest,
)
from .properties import property_suite
from .seeds import SkewHadamard, conference, paley_skew_hadamard, skew_double
from .theorems import DEFAULT_BUDGET, construct, scan_variants, validate_params
from .verify import is_conference_core, is_hadamard, is_skew_hadamard

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
THEOREMS = ("3.1", "3.2", "3.3", "3.4")


class UsageError(Exception):
    pass


def _emit_matrix(args, matrix, kind):
    text = render(matrix, kind)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {kind} matrix of order {matrix.order} to {args.out}")
    else:
        sys.stdout.write(text)


def _emit_manifest(args, manifest):
    if getattr(args, "manifest", None):
        Path(args.manifest).write_text(dump_manifest(manifest))


def cmd_build(args):
    params = validate_params(args.theorem, args.q)
    if args.variant == "search":
        report = scan_variants(params, args.budget, stop_at_first_pass=True)
        result = report.passes[0] if report.passes else report.results[-1]
    else:
        result = construct(params, args.variant, args.m_variant)
    print(result.summary())
    for note in result.certificate.notes:
        print(f"  {note}")
    _emit_manifest(args, construction_manifest(result))
    if not result.passed:
        return EXIT_FAIL
    if args.out:
        Path(args.out).write_text(render(result.matrix, "hadamard"))
        print(f"wrote hadamard matrix of order {params.order} to {args.out}")
    return EXIT_OK


def cmd_conference(args):
    c = conference(field_of_order(args.q))
    _emit_manifest(args, conference_manifest(args.q))
    _emit_matrix(args, c.matrix, "conference")
    return EXIT_OK


def cmd_paley(args):
    h = paley_skew_hadamard(field_of_order(args.q))
    _emit_manifest(args, skew_manifest(h))
    _emit_matrix(args, h.matrix, "skew")
    return EXIT_OK


def cmd_double(args):
    m, _ = read_hmat(args.input)
    h = skew_double(SkewHadamard(m.order, m, None))
    _emit_matrix(args, h.matrix, "skew")
    return EXIT_OK


def cmd_verify(args):
    m, kind = read_hmat(args.path)
    if kind == "conference":
        cert = is_conference_core(m, m.order)
    elif kind == "skew":
        cert = is_skew_hadamard(m, method=args.method)
    else:
        cert = is_hadamard(m, method=args.method)
    print(cert.summary())
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_props(args):
    report = property_suite(args.q)
    print(f"identities for q = {args.q}")
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_variants(args):
    params = validate_params(args.theorem, args.q)
    report = scan_variants(params, args.budget, workers=args.workers)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passes else EXIT_FAIL


def cmd_catalog(args):
    if args.max_order < 4:
        raise UsageError("--max-order must be at least 4")
    rows = coverage(args.max_order // 4, args.budget, args.workers)
    sys.stdout.write(render_coverage(rows, args.reached_only))
    if args.jsonl:
        with open(args.jsonl, "w") as fh:
            for row in rows:
                for e in row.routes:
                    fh.write(json.dumps(e.to_dict(), sort_keys=True) + "\n")
    return EXIT_OK


def cmd_reproduce(args):
    manifest = load_manifest(Path(args.manifest_path).read_text())
    matrix, kind = reproduce(manifest)
    _emit_matrix(args, matrix, kind)
    return EXIT_OK


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hadamard-forge", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="assemble S(x)M + I(x)N and verify it")
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--variant", default="printed",
                   help="printed, eq4, search, or a grid such as [[+P,+Q],[-Q,+P]]")
    p.add_argument("--m-variant", default=None, help="Q/Qt pattern for case-A M, e.g. [[+Q,+Q],[+Qt,-Qt]]")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="limit for --variant search")
    p.add_argument("--out")
    p.add_argument("--manifest")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("conference", help="quadratic-character conference matrix")
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--out")
    p.add_argument("--manifest")
    p.set_defaults(func=cmd_conference)

    p = sub.add_parser("paley", help="Paley skew Hadamard matrix of order q+1")
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--out")
    p.add_argument("--manifest")
    p.set_defaults(func=cmd_paley)

    p = sub.add_parser("double", help="double a skew Hadamard matrix")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("verify", help="verify an HMAT file")
    p.add_argument("path")
    p.add_argument("--method", choices=("dense", "packed"), default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("props", help="check the Q/J/I/R identities for one q")
    p.add_argument("--q", required=True, type=int)
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("variants", help="search the block-variant family")
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_variants)

    p = sub.add_parser("catalog", help="orders 4t reached by verified routes")
    p.add_argument("--max-order", required=True, type=int)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--reached-only", action="store_true")
    p.add_argument("--jsonl", help="also write one JSON object per route")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("reproduce", help="rebuild the matrix described by a manifest")
    p.add_argument("manifest_path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (HadamardError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
