"""Command-line interface.

One executable, eight subcommands:

    check PATTERN PERM      avoidance verdict for one permutation
    count                   |S_n(pattern)| by brute force / construction / transform
    enumerate               list the avoiders themselves
    decompose PERM          split an avoider into its end-max block list
    compose BLOCKS          reassemble a block list into the avoider
    transform {invert,inverse} --seq ...
    bell --count N          leading Bell numbers 1,1,2,5,15,...
    verify                  three-way check of the counting identity

Exit codes: 0 success / avoids / identity verified; 1 negative mathematical
verdict (pattern contained, non-avoider input, count mismatch); 2 usage,
parse, cap, or overflow errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .decomposition import (
    InvalidBlockError,
    NotAnAvoiderError,
    compose,
    format_block_list,
    parse_block_list,
    to_list,
)
from .enumeration import (
    DEFAULT_BRUTE_CAP,
    brute_force_avoiders,
    construct_avoiders,
    count_avoiders,
)
from .patterns import (
    BARRED_24135,
    first_violation,
    format_pattern,
    format_permutation,
    parse_pattern,
    parse_permutation,
)
from .transforms import (
    bell_numbers,
    format_report,
    format_sequence,
    invert_inverse,
    invert_transform,
    parse_sequence,
    verify_invert_identity,
)


def _emit(args, plain: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(plain)


def _cmd_check(args) -> int:
    rho = parse_pattern(args.pattern)
    host = parse_permutation(args.perm)
    witness = first_violation(rho, host)
    avoids = witness is None
    if not rho.barred:
        verdict = "avoids" if avoids else "contains"
        plain = verdict
    else:
        verdict = "avoids" if avoids else "violates"
        plain = verdict if avoids else f"{verdict}\nwitness: {format_permutation(witness)}"
    payload = {"pattern": format_pattern(rho), "perm": list(host),
               "avoids": avoids, "verdict": verdict,
               "witness": None if avoids else list(witness)}
    _emit(args, plain, payload)
    return 0 if avoids else 1


def _cmd_count(args) -> int:
    rho = parse_pattern(args.pattern)
    report = count_avoiders(rho, args.n, method=args.method,
                            cap=args.brute_cap, jobs=args.jobs)
    payload = {"pattern": format_pattern(rho), "n": report.n,
               "method": report.method, "count": report.count}
    _emit(args, str(report.count), payload)
    return 0


def _cmd_enumerate(args) -> int:
    rho = parse_pattern(args.pattern)
    if args.method == "brute":
        perms = brute_force_avoiders(
            rho, args.n,
            cap=DEFAULT_BRUTE_CAP if args.brute_cap is None else args.brute_cap,
            jobs=args.jobs)
    elif args.method == "construct":
        if rho != BARRED_24135:
            raise ValueError("method 'construct' is only available for ~2413~5")
        perms = construct_avoiders(args.n)
    else:
        raise ValueError("enumerate supports methods 'brute' and 'construct'")
    plain = "\n".join(format_permutation(p) for p in perms)
    payload = {"pattern": format_pattern(rho), "n": args.n,
               "perms": [list(p) for p in perms]}
    _emit(args, plain, payload)
    return 0


def _cmd_decompose(args) -> int:
    pi = parse_permutation(args.perm)
    blocks = to_list(pi)
    payload = {"perm": list(pi), "blocks": [list(b) for b in blocks]}
    _emit(args, format_block_list(blocks), payload)
    return 0


def _cmd_compose(args) -> int:
    blocks = parse_block_list(args.blocks)
    pi = compose(blocks)
    payload = {"blocks": [list(b) for b in blocks], "perm": list(pi)}
    _emit(args, format_permutation(pi), payload)
    return 0


def _cmd_transform(args) -> int:
    seq = parse_sequence(args.seq)
    result = invert_transform(seq) if args.direction == "invert" else invert_inverse(seq)
    payload = {"op": args.direction, "input": list(seq), "output": list(result)}
    _emit(args, format_sequence(result), payload)
    return 0


def _cmd_bell(args) -> int:
    terms = bell_numbers(args.count)
    _emit(args, format_sequence(terms), {"count": args.count, "terms": list(terms)})
    return 0


def _cmd_verify(args) -> int:
    report = verify_invert_identity(args.n_max, args.brute_cap, jobs=args.jobs)
    payload = {"rows": [{"n": r.n, "transform": r.transform, "construct": r.construct,
                         "brute": r.brute, "match": r.match} for r in report.rows],
               "ok": report.ok}
    _emit(args, format_report(report), payload)
    return 0 if report.ok else 1


def _add_format(parser) -> None:
    parser.add_argument("--format", choices=("plain", "json"), default="plain",
                        help="output format (default plain)")


def _add_jobs(parser) -> None:
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="parallel workers for brute-force enumeration "
                             "(default: available cores)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barredperms",
        description="Barred permutation patterns: avoidance, decomposition, "
                    "and exact counting checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test one permutation against a pattern")
    p.add_argument("pattern", help="pattern, e.g. '~2413~5' or '231'")
    p.add_argument("perm", help="permutation, e.g. '2 4 1 3 5'")
    _add_format(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("count", help="count avoiders of a given length")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("brute", "construct", "transform"),
                   default="brute")
    p.add_argument("--brute-cap", type=int, default=None,
                   help=f"brute-force size cap (default {DEFAULT_BRUTE_CAP})")
    _add_format(p)
    _add_jobs(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="list avoiders, one per line")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("brute", "construct"), default="brute")
    p.add_argument("--brute-cap", type=int, default=None)
    _add_format(p)
    _add_jobs(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("decompose",
                       help="split a ~2413~5-avoider into end-max blocks")
    p.add_argument("perm")
    _add_format(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("compose", help="reassemble end-max blocks, e.g. '1 3 2 4; 1'")
    p.add_argument("blocks")
    _add_format(p)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("transform", help="apply the Invert transform or its inverse")
    p.add_argument("direction", choices=("invert", "inverse"))
    p.add_argument("--seq", required=True, help="comma-separated integers")
    _add_format(p)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("bell", help="leading Bell numbers 1,1,2,5,15,...")
    p.add_argument("--count", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_bell)

    p = sub.add_parser("verify",
                       help="check avoider counts against Invert(Bell) three ways")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--brute-cap", type=int, default=DEFAULT_BRUTE_CAP)
    _add_format(p)
    _add_jobs(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotAnAvoiderError, InvalidBlockError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
