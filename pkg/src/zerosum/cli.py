"""Command-line interface.

Commands:
    bounds    print every applicable lower-bound formula for a group
    construct build a certificate (non-dispersive sequence or lifted
              zero-sum-free sequence) and write it to a file
    verify    re-check a certificate with the spectrum oracle
    exact     exhaustive Davenport / distinct-lengths computation
    spectrum  print the full zero-sum length spectrum of a certificate

Exit codes: 0 success, 1 failed verification, 2 parse/format error,
3 p-group passed to a non-p-group-only formula, 4 violated construction
hypothesis, 5 search budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import bounds as bounds_mod
from .certificates import (
    CLAIM_NON_DISPERSIVE,
    make_certificate,
    read_certificate,
    write_certificate,
)
from .constructions import ConstructionParams, build_lzfs_certificate, build_nondispersive
from .engine import SearchLimits, davenport_exact, disc_exact, length_spectrum, verify_certificate
from .errors import (
    BadParams,
    BudgetExceeded,
    ParseError,
    PGroup,
    PreconditionFailed,
)
from .groups import d_star, parse_group_literal

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_PGROUP = 3
EXIT_PRECONDITION = 4
EXIT_BUDGET = 5


def _format_params(params: dict) -> str:
    if not params:
        return "-"
    return " ".join(f"{k}={v}" for k, v in params.items())


def _cmd_bounds(args) -> int:
    group = parse_group_literal(args.group)
    limits = SearchLimits(max_nodes=args.exact_budget) if args.exact_budget else None
    if args.formula == "gene":
        try:
            rows = [bounds_mod.bound_gene(group)]
        except PGroup as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PGROUP
    else:
        rows = bounds_mod.all_bounds(group, limits)
        if args.formula != "all":
            rows = [r for r in rows if r.formula.lower() == args.formula]
            if not rows:
                print(f"error: formula {args.formula} not applicable", file=sys.stderr)
                return EXIT_PRECONDITION
    best = max(
        rows, key=lambda b: (b.lower_bound, -bounds_mod._FORMULA_RANK[b.formula])
    )
    print(f"group {group.literal()}  |G|={group.order}  D*={d_star(group)}")
    print(f"{'':2}{'formula':8}{'params':34}{'bound':>6}{'delta':>7}")
    for row in rows:
        mark = "*" if row is best else " "
        print(
            f"{mark:2}{row.formula:8}{_format_params(row.params):34}"
            f"{row.lower_bound:>6}{row.delta:>7}"
        )
    print(f"best: {best.formula} {best.lower_bound} (delta {best.delta})")
    return EXIT_OK


def _cmd_construct(args) -> int:
    if args.mode == "nondispersive":
        seq, unique = build_nondispersive(
            ConstructionParams(args.n, args.p, args.ell, args.r)
        )
        provenance = f"nondispersive n={args.n} p={args.p} ell={args.ell} r={args.r}"
        cert = make_certificate(seq, CLAIM_NON_DISPERSIVE, provenance, unique)
    else:
        for name in ("k", "k1", "t"):
            if getattr(args, name) is None:
                print(f"error: --{name} is required for --mode lzfs", file=sys.stderr)
                return EXIT_PARSE
        cert = build_lzfs_certificate(
            args.n, args.k, args.r, args.p, args.k1, args.t, args.ell
        )
    write_certificate(cert, args.out)
    claim = cert.claim
    if cert.unique_length is not None:
        claim += f" {cert.unique_length}"
    print(f"wrote {args.out}: group {cert.group.literal()}, claim {claim}, length {cert.length}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    cert = read_certificate(args.file)
    limits = SearchLimits(max_cells=args.budget) if args.budget else None
    report = verify_certificate(cert, limits)
    verdict = "PASS" if report.passed else "FAIL"
    print(f"{verdict} {args.file}: {report.message} (spectrum {report.spectrum})")
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_spectrum(args) -> int:
    cert = read_certificate(args.file)
    limits = SearchLimits(max_cells=args.budget) if args.budget else None
    spectrum = length_spectrum(cert.sequence(), limits)
    print(f"spectrum {spectrum}")
    return EXIT_OK


def _cmd_exact(args) -> int:
    group = parse_group_literal(args.group)
    limits = SearchLimits(max_nodes=args.budget) if args.budget else SearchLimits()
    seeds = ()
    if args.what == "davenport" and group.orders == group.canonical:
        cert = bounds_mod.lzfs_certificate_for(group)
        if cert is not None:
            seeds = (cert.sequence(),)
    search = davenport_exact if args.what == "davenport" else disc_exact
    try:
        result = search(group, limits, seeds=seeds)
    except BudgetExceeded as exc:
        if exc.lower_bound is None:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        print(
            f"budget exceeded after {exc.nodes} nodes; "
            f"best lower bound so far: {args.what} >= {exc.lower_bound} "
            f"(witness length {len(exc.witness)})"
        )
        return EXIT_BUDGET
    print(f"{args.what}({group.literal()}) = {result.value}")
    print(f"nodes explored: {result.nodes_explored}")
    print(f"witness (length {len(result.witness)}):")
    for term in result.witness:
        print(f"  {term.literal()}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerosum",
        description="Lower bounds for the Davenport constant, with verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="evaluate all bound formulas")
    p_bounds.add_argument("--group", required=True, help="comma-separated orders")
    p_bounds.add_argument(
        "--formula",
        choices=["all", "dstar", "lzfs", "est", "gene"],
        default="all",
    )
    p_bounds.add_argument(
        "--exact-budget",
        type=int,
        default=None,
        help="also run the exhaustive search with this node budget",
    )
    p_bounds.set_defaults(func=_cmd_bounds)

    p_construct = sub.add_parser("construct", help="build a certificate")
    p_construct.add_argument("--mode", choices=["nondispersive", "lzfs"], required=True)
    p_construct.add_argument("--n", type=int, required=True)
    p_construct.add_argument("--p", type=int, required=True)
    p_construct.add_argument("--ell", type=int, required=True)
    p_construct.add_argument("--r", type=int, required=True)
    p_construct.add_argument("--k", type=int, default=None)
    p_construct.add_argument("--k1", type=int, default=None)
    p_construct.add_argument("--t", type=int, default=None)
    p_construct.add_argument("--out", required=True)
    p_construct.set_defaults(func=_cmd_construct)

    p_verify = sub.add_parser("verify", help="verify a certificate file")
    p_verify.add_argument("file")
    p_verify.add_argument("--budget", type=int, default=None, help="max DP cells")
    p_verify.set_defaults(func=_cmd_verify)

    p_exact = sub.add_parser("exact", help="exhaustive exact computation")
    p_exact.add_argument("--group", required=True)
    p_exact.add_argument("--what", choices=["davenport", "disc"], required=True)
    p_exact.add_argument("--budget", type=int, default=None, help="max search nodes")
    p_exact.set_defaults(func=_cmd_exact)

    p_spectrum = sub.add_parser("spectrum", help="spectrum of a certificate")
    p_spectrum.add_argument("file")
    p_spectrum.add_argument("--budget", type=int, default=None, help="max DP cells")
    p_spectrum.set_defaults(func=_cmd_spectrum)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionFailed, BadParams) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
