"""Command-line interface: exact rectangle-count tables, identity verification,
chromatic polynomials of arbitrary graphs, and surgered-graph comparisons.

Exit codes: 0 success; 1 identity failure; 2 invalid arguments or input;
3 cost limit (node budget or vertex ceiling) exceeded.  Data goes to stdout,
diagnostics to stderr; all numbers are exact decimals.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .chromatic import DEFAULT_MAX_VERTICES, chromatic_poly, eval_poly, count_colorings_bruteforce
from .errors import BudgetExceededError, VertexLimitError
from .formulas import aps_g, g_npq_closed, riordan_l3, thm3_g
from .graphs import build_gn, build_gnpq, parse_graph
from .oracle import DEFAULT_NODE_BUDGET, count_latin
from .verify import DEFAULT_SEED, VerifyConfig, render_report, run_verify

FORMULA_CHOICES = ("riordan", "aps", "thm3", "engine", "brute", "latin-oracle")
FORMAT_CHOICES = ("plain", "csv", "json")


def _parse_range(text: str) -> tuple[int, int]:
    """Parse 'A' or 'A..B' into an inclusive integer range."""
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"bad range {text!r}; expected 'A' or 'A..B'") from None
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _table_cells(args: argparse.Namespace) -> list[tuple[int, int]]:
    n_lo, n_hi = _parse_range(args.n)
    if n_lo < 1:
        raise ValueError(f"n must be >= 1, got {n_lo}")
    if args.formula == "riordan":
        if args.lam is not None or args.lambda_offset is not None:
            raise ValueError(
                "the riordan formula has no lambda parameter; drop --lambda/--lambda-offset"
            )
        return [(n, n) for n in range(n_lo, n_hi + 1)]
    if args.lam is not None and args.lambda_offset is not None:
        raise ValueError("give at most one of --lambda and --lambda-offset")
    if args.lam is not None:
        lam_lo, lam_hi = _parse_range(args.lam)
        if lam_lo < 0:
            raise ValueError(f"lambda must be >= 0, got {lam_lo}")
        return [
            (n, lam)
            for n in range(n_lo, n_hi + 1)
            for lam in range(lam_lo, lam_hi + 1)
        ]
    off_lo, off_hi = _parse_range(args.lambda_offset or "0")
    if off_lo < 0:
        raise ValueError(f"lambda offset must be >= 0, got {off_lo}")
    return [
        (n, n + off) for n in range(n_lo, n_hi + 1) for off in range(off_lo, off_hi + 1)
    ]


def cmd_table(args: argparse.Namespace) -> int:
    cells = _table_cells(args)
    gn_polys = {}

    def value(n: int, lam: int) -> int:
        if args.formula == "riordan":
            return riordan_l3(n)
        if args.formula == "aps":
            return aps_g(n, lam)
        if args.formula == "thm3":
            return thm3_g(n, lam)
        if args.formula == "engine":
            if n not in gn_polys:
                gn_polys[n] = chromatic_poly(build_gn(n), max_vertices=args.max_vertices)
            return eval_poly(gn_polys[n], lam)
        if args.formula == "brute":
            return count_colorings_bruteforce(build_gn(n), lam, node_budget=args.node_budget)
        return count_latin(n, lam, node_budget=args.node_budget)

    rows = [(n, lam, args.formula, str(value(n, lam))) for n, lam in cells]
    if args.format == "csv":
        print("n,lambda,formula,value")
        for n, lam, formula, val in rows:
            print(f"{n},{lam},{formula},{val}")
    elif args.format == "json":
        payload = [
            {"n": n, "lambda": lam, "formula": formula, "value": val}
            for n, lam, formula, val in rows
        ]
        print(json.dumps(payload, indent=2))
    else:
        for n, lam, formula, val in rows:
            print(f"{n} {lam} {formula} {val}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = VerifyConfig(
        n_max=args.n_max,
        lambda_offset_max=args.lambda_offset_max,
        include_engine=not args.skip_engine,
        include_oracle=not args.skip_oracle,
        seed=args.seed,
    )
    results = run_verify(cfg)
    sys.stdout.write(render_report(results))
    return 0 if all(r.passed for r in results) else 1


def cmd_chromatic(args: argparse.Namespace) -> int:
    try:
        text = Path(args.graph_file).read_text()
    except OSError as exc:
        raise ValueError(f"cannot read {args.graph_file}: {exc}") from None
    poly = chromatic_poly(parse_graph(text), max_vertices=args.max_vertices)
    print(f"degree={poly.degree}")
    for coefficient in poly.coefficients:
        print(coefficient)
    return 0


def cmd_gnpq(args: argparse.Namespace) -> int:
    g = build_gnpq(args.n, args.p, args.q)
    engine = eval_poly(chromatic_poly(g, max_vertices=args.max_vertices), args.lam)
    if args.p + args.q == args.n:
        closed = g_npq_closed(args.n, args.p, args.q, args.lam)
        print(f"closed-form: {closed}")
        print(f"engine: {engine}")
        print("EQUAL" if closed == engine else "UNEQUAL")
        return 0 if closed == engine else 1
    print(f"closed-form: n/a (needs p+q = n; got p+q={args.p + args.q}, n={args.n})")
    print(f"engine: {engine}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latin3",
        description="Exact counts of 3 x n Latin rectangles on lambda symbols, "
        "via independent closed forms, a chromatic-polynomial engine, and "
        "brute-force enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit a table of counts")
    table.add_argument("--formula", required=True, choices=FORMULA_CHOICES)
    table.add_argument("--n", required=True, help="column count: 'A' or 'A..B'")
    table.add_argument("--lambda", dest="lam", help="absolute symbol count range")
    table.add_argument(
        "--lambda-offset", help="symbol count as offset from n (keeps lambda >= n)"
    )
    table.add_argument("--format", choices=FORMAT_CHOICES, default="plain")
    table.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    table.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run the identity cross-check matrix")
    verify.add_argument("--n-max", type=int, default=3)
    verify.add_argument("--lambda-offset-max", type=int, default=2)
    verify.add_argument("--skip-engine", action="store_true")
    verify.add_argument("--skip-oracle", action="store_true")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.set_defaults(func=cmd_verify)

    chromatic = sub.add_parser(
        "chromatic", help="chromatic polynomial of a graph in the text format"
    )
    chromatic.add_argument("graph_file")
    chromatic.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    chromatic.set_defaults(func=cmd_chromatic)

    gnpq = sub.add_parser(
        "gnpq", help="closed form vs engine on the surgered graph G(n,p,q)"
    )
    gnpq.add_argument("n", type=int)
    gnpq.add_argument("p", type=int)
    gnpq.add_argument("q", type=int)
    gnpq.add_argument("lam", type=int, metavar="lambda")
    gnpq.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    gnpq.set_defaults(func=cmd_gnpq)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceededError, VertexLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
