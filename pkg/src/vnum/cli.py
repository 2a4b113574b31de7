"""``vnum`` command line.

Exit codes: 0 success (checks: every report AGREE, INAPPLICABLE or a flagged
known issue), 1 unexpected DISAGREE, 2 usage or input error, 3 a guard
(--max-subsets, --max-witness-degree) was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .dsl import evaluate, parse
from .errors import GuardExceeded, InvalidInput, VnumError
from .monomial import alpha
from .vnumber import METHODS, associated_primes, v_number

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines)


def _emit(args, payload, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _ideal(args):
    return evaluate(parse(args.expr))


def cmd_gens(args) -> int:
    I = _ideal(args)
    gens = [m.render(I.vars) for m in I.monomials]
    _emit(args, {"expr": args.expr, "vars": list(I.vars.names), "gens": gens}, I.render())
    return EXIT_OK


def cmd_alpha(args) -> int:
    value = alpha(_ideal(args))
    _emit(args, {"expr": args.expr, "alpha": value}, str(value))
    return EXIT_OK


def cmd_v(args) -> int:
    I = _ideal(args)
    v, w = v_number(I, args.method, max_witness_degree=args.max_witness_degree, max_subsets=args.max_subsets)
    payload = {"expr": args.expr, "method": args.method, "v": v,
               "witness": w.f.render(I.vars), "prime": w.prime.render()}
    _emit(args, payload, f"v = {v}\nwitness f = {payload['witness']}\n(I : f) = {payload['prime']}")
    return EXIT_OK


def cmd_ass(args) -> int:
    I = _ideal(args)
    res = associated_primes(I, args.max_witness_degree)
    rows = [[p.render(), "embedded" if e else "minimal"] for p, e in zip(res.primes, res.embedded)]
    payload = {"expr": args.expr, "primes": [{"prime": p, "embedded": k == "embedded"} for p, k in rows]}
    _emit(args, payload, "\n".join(f"{p}  {k}" for p, k in rows))
    return EXIT_OK


def _report_rows(reports):
    def fmt(x):
        return json.dumps(x, separators=(",", ":")) if not isinstance(x, str) else x
    return [[r.check_id, fmt(r.instance), fmt(r.formula), fmt(r.computed), r.status + ("*" if r.unexpected is False and r.status == checks.DISAGREE else ""),
             r.notes] for r in reports]


def _finish(args, reports) -> int:
    payload = [r.to_json() for r in reports]
    text = _table(_report_rows(reports), ["check", "instance", "formula", "computed", "status", "notes"])
    _emit(args, payload, text)
    bad = sum(r.unexpected for r in reports)
    known = sum(r.status == checks.DISAGREE and r.known_issue for r in reports)
    print(f"{len(reports)} reports, {bad} unexpected DISAGREE, {known} known-issue DISAGREE", file=sys.stderr)
    return EXIT_DISAGREE if bad else EXIT_OK


def _ranges(args, check_id: str) -> dict:
    ranges = checks.parse_ranges(args.range)
    if args.seed is not None and "seed" in checks.resolve(check_id).defaults and "seed" not in ranges:
        ranges["seed"] = [args.seed]
    return ranges


def cmd_check(args) -> int:
    checks.set_guards(args.max_subsets, args.max_witness_degree)
    return _finish(args, checks.run_check(args.check_id, _ranges(args, args.check_id)))


def cmd_sweep(args) -> int:
    if args.suite != "all" and args.suite not in checks.REGISTRY:
        raise InvalidInput(f"unknown suite {args.suite!r}; use 'all' or a check id")
    checks.set_guards(args.max_subsets, args.max_witness_degree)
    ids = sorted(checks.REGISTRY) if args.suite == "all" else [args.suite]
    reports = []
    for cid in ids:
        reports.extend(checks.run_check(cid, _ranges(args, cid)))
    return _finish(args, reports)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized tree and ideal fixtures")
    common.add_argument("--max-subsets", type=int, default=None, help="abort (exit 3) past this many stable-set candidates")
    common.add_argument("--max-witness-degree", type=int, default=None,
                        help="abort (exit 3) when a witness scan would pass this degree")

    parser = argparse.ArgumentParser(prog="vnum", description="v-numbers of monomial ideals and formula checks")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (("gens", cmd_gens, "minimal generators"), ("alpha", cmd_alpha, "least generator degree"),
                               ("ass", cmd_ass, "associated primes with embedded flags")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("expr")
        p.set_defaults(func=fn)

    p = sub.add_parser("v", parents=[common], help="v-number with a certifying witness")
    p.add_argument("expr")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.set_defaults(func=cmd_v)

    p = sub.add_parser("check", parents=[common], help="sweep one registered check")
    p.add_argument("check_id")
    p.add_argument("--range", default=None, help="e.g. 'n=4..12,k=1..3,family=path|cycle'")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", parents=[common], help="run every registered check at its default range")
    p.add_argument("--suite", default="all")
    p.set_defaults(func=cmd_sweep, range=None)

    sub.add_parser("list", help="list check ids").set_defaults(func=cmd_list, format="table")
    return parser


def cmd_list(args) -> int:
    for cid in sorted(checks.REGISTRY):
        c = checks.REGISTRY[cid]
        flag = "  [known issue]" if c.known_issue else ""
        print(f"{cid:30s} {c.summary}{flag}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"vnum: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except VnumError as exc:
        print(f"vnum: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
