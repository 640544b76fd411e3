"""Command-line front end.

Exit codes: 0 success, 1 bound violation, 2 malformed input,
3 precondition failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import DomainError, corollary_bound, degenerate_subsets, theorem_bound
from .codec import MalformedInput, rat_from_json, rat_to_json
from .dependence import find_relation, rank_exact, rank_rational_series, s_membership, system_terms, wronskian_degree_bound
from .exact_arith import Polynomial, RationalFunction, format_rational
from .instance_io import dump_report, format_table, load_functions, load_instance
from .power_maps import pow_u, unit_decompose
from .series import NotAUnit, PoleAtOrigin, rf_to_series
from .unit_search import IndependenceError, to_system, verify_bound

EXIT_OK = 0
EXIT_BOUND_VIOLATION = 1
EXIT_MALFORMED = 2
EXIT_PRECONDITION = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


def _coeff_list(text: str) -> Polynomial:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if not parts:
        raise MalformedInput(f"empty coefficient list {text!r}")
    return Polynomial(rat_from_json(p) for p in parts)


def cmd_bounds(args, out) -> int:
    t = theorem_bound(args.n, args.r)
    c = corollary_bound(args.n, args.r)
    print(f"theorem={t} corollary={c} degenerate_subsets={len(degenerate_subsets(args.n))}", file=out)
    return EXIT_OK


def cmd_power(args, out) -> int:
    num, den = _coeff_list(args.num), _coeff_list(args.den)
    if den.is_zero():
        raise MalformedInput("zero denominator")
    f = RationalFunction(num, den)
    u = rat_from_json(args.u)
    lead, unit = unit_decompose(rf_to_series(f, args.order))
    result = pow_u(unit, u)
    print(f"lead={format_rational(lead)}", file=out)
    print(f"u={format_rational(u)} order={args.order}", file=out)
    print("pow=[" + ", ".join(rat_to_json(c) for c in result.coeffs) + "]", file=out)
    return EXIT_OK


def cmd_rank(args, out) -> int:
    fs = load_functions(args.file)
    exact = rank_exact(fs)
    series_rank, certified = rank_rational_series(fs, args.order)
    bound = wronskian_degree_bound(fs)
    order = args.order or bound + len(fs)
    print(f"rank_exact={exact} rank_series={series_rank} certified={'true' if certified else 'false'} "
          f"degree_bound={bound} order={order}", file=out)
    return EXIT_OK


def cmd_member(args, out) -> int:
    loaded = load_instance(args.file)
    inst = loaded.instance
    u = tuple(rat_from_json(p) for p in args.u.replace(" ", "").split(",") if p)
    if len(u) != inst.group.r:
        raise MalformedInput(f"--u needs {inst.group.r} entries, got {len(u)}")
    sys_ = to_system(inst, args.order or loaded.truncation)
    verdict = s_membership(sys_, u)
    line = f"member={'true' if verdict else 'false'}"
    if verdict:
        rel = find_relation(system_terms(sys_, u))
        if rel is not None:
            line += " relation=[" + ", ".join(rat_to_json(x) for x in rel.xi) + "]"
    print(line, file=out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    loaded = load_instance(args.file)
    box = loaded.box if args.box is None else args.box
    inst = loaded.instance
    if args.order is not None:
        inst = type(inst)(inst.group, inst.coefficients, inst.basepoint, args.order)
    rep = verify_bound(inst, box, workers=args.workers)
    out.write(format_table(rep))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dump_report(rep))
    if not rep.within_bound:
        print(f"error: {rep.nondegenerate_count} non-degenerate cosets exceed the bound {rep.bound}; "
              "this indicates a bug", file=sys.stderr)
        return EXIT_BOUND_VIOLATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="unitcosets", description="Coset bounds for unit equations over Q(z).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bounds", help="closed-form bounds")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--r", type=int, required=True)
    b.set_defaults(func=cmd_bounds)

    pw = sub.add_parser("power", help="rational power of the 1-unit part of num/den")
    pw.add_argument("--num", required=True, help="ascending coefficients, comma separated")
    pw.add_argument("--den", default="1")
    pw.add_argument("--u", required=True)
    pw.add_argument("--order", type=int, default=8)
    pw.set_defaults(func=cmd_power)

    rk = sub.add_parser("rank", help="exact and Wronskian rank of a function family")
    rk.add_argument("--file", required=True)
    rk.add_argument("--order", type=int, default=None)
    rk.set_defaults(func=cmd_rank)

    m = sub.add_parser("member", help="membership of an exponent vector in S")
    m.add_argument("--file", required=True)
    m.add_argument("--u", required=True, help="comma separated rationals u1,...,ur")
    m.add_argument("--order", type=int, default=None)
    m.set_defaults(func=cmd_member)

    s = sub.add_parser("search", help="enumerate solutions and verify the coset bound")
    s.add_argument("--file", required=True)
    s.add_argument("--box", type=int, default=None)
    s.add_argument("--order", type=int, default=None)
    s.add_argument("--out", default=None)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_search)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "order", None) is not None and args.order < 2:
            raise MalformedInput("--order must be at least 2")
        return args.func(args, out)
    except (MalformedInput, json.JSONDecodeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except (IndependenceError, DomainError, PoleAtOrigin, NotAUnit, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
