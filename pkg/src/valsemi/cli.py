"""Command-line front end.

Every subcommand reads exact inputs ("p/q" rationals, "Y^2 - X^3" style
polynomials) and emits either a human-readable table or, with --json,
machine output with stable keys.  Exit codes: 0 success, 1 domain error,
2 usage error, 3 oracle disagreement, 4 inconclusive splitting report.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import invariants, oracle, splitting
from .errors import DomainError
from .groups import (SubgroupParams, enumerate_subgroups, list_elements,
                     subgroup_order, validate_params)
from .numtheory import RootContext, format_rational, parse_rational
from .qpoly import (build_generating_sequence, eigen_report, format_polynomial,
                    parse_polynomial, valuation_of)
from .valuation import semigroup_slice, validate_sequence

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_ORACLE = 3
EXIT_INCONCLUSIVE = 4


def _parse_gammas(text: str):
    return validate_sequence([parse_rational(part) for part in text.split(",")])


def _parse_lambdas(text: str | None):
    if text is None:
        return None
    return [parse_rational(part) for part in text.split(",")]


def _parse_subgroup(args) -> SubgroupParams:
    parts = [int(p) for p in args.subgroup.split(",")]
    if len(parts) != 4:
        raise DomainError("--subgroup expects i,j,t,x")
    return validate_params(args.m, args.n, *parts)


def _ctx(args, params: SubgroupParams) -> RootContext:
    return RootContext(params.m, params.n, getattr(args, "w1", 1), getattr(args, "w2", 1))


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _add_subgroup_options(sub, w_flags=True):
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--subgroup", required=True, help="i,j,t,x")
    if w_flags:
        sub.add_argument("--w1", type=int, default=1)
        sub.add_argument("--w2", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="valsemi",
        description="Exact valuation semigroups on K[X,Y] and invariant subrings "
                    "under diagonal actions of finite abelian groups.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("subgroups", help="enumerate subgroups of U_m x U_n")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true")

    p = subs.add_parser("order", help="order of the subgroup (i,j,t,x)")
    for name in ("m", "n", "i", "j", "t", "x"):
        p.add_argument(name, type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true")

    p = subs.add_parser("semigroup", help="truncated semigroup slice")
    p.add_argument("--gammas", required=True)
    p.add_argument("--bound", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true")

    p = subs.add_parser("invariant-semigroup", help="invariant-ring semigroup slice")
    _add_subgroup_options(p)
    p.add_argument("--gammas", required=True)
    p.add_argument("--bound", required=True)
    p.add_argument("--lambdas")
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true")

    p = subs.add_parser("genseq", help="build the key polynomials")
    p.add_argument("--gammas", required=True)
    p.add_argument("--lambdas")
    p.add_argument("--json", action="store_true")

    p = subs.add_parser("eigen", help="eigenfunction test for a polynomial")
    _add_subgroup_options(p)
    p.add_argument("--poly", required=True)
    p.add_argument("--json", action="store_true")

    p = subs.add_parser("value", help="valuation of a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--gammas", required=True)
    p.add_argument("--lambdas")
    p.add_argument("--json", action="store_true")

    p = subs.add_parser("decide-fg", help="finite-generation trichotomy")
    _add_subgroup_options(p)
    p.add_argument("--gammas")
    p.add_argument("--depth", type=int)
    p.add_argument("--json", action="store_true")

    p = subs.add_parser("construct", help="explicit compatible valuation")
    _add_subgroup_options(p)
    p.add_argument("--depth", type=int, default=4, help="number of gammas produced")
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true")

    p = subs.add_parser("splitting", help="value-group index certificate")
    _add_subgroup_options(p)
    p.add_argument("--gammas", required=True)
    p.add_argument("--depth", type=int, help="largest gamma index used")
    p.add_argument("--json", action="store_true")

    p = subs.add_parser("verify-structure", help="structural congruence checks")
    _add_subgroup_options(p)
    p.add_argument("--gammas", required=True)
    p.add_argument("--depth", type=int)
    p.add_argument("--json", action="store_true")
    return parser


def _cmd_subgroups(args) -> int:
    params_list = enumerate_subgroups(args.m, args.n)
    if args.verify:
        brute = set(oracle.brute_subgroups(args.m, args.n))
        fast = {frozenset(((e.a * p.i) % p.m, (e.b * p.j) % p.n)
                          for e in list_elements(p)) for p in params_list}
        if fast != brute:
            print("oracle disagreement: subgroup element sets differ", file=sys.stderr)
            return EXIT_ORACLE
    if args.json:
        print(json.dumps([p.to_json_dict() for p in params_list], sort_keys=True))
    else:
        print(f"{'i':>4} {'j':>4} {'t':>4} {'x':>4} {'M':>4} {'N':>4} {'order':>6}")
        for p in params_list:
            print(f"{p.i:>4} {p.j:>4} {p.t:>4} {p.x:>4} {p.M:>4} {p.N:>4} "
                  f"{subgroup_order(p):>6}")
        print(f"{len(params_list)} subgroups of U_{args.m} x U_{args.n}")
    return EXIT_OK


def _cmd_order(args) -> int:
    params = validate_params(args.m, args.n, args.i, args.j, args.t, args.x)
    order = subgroup_order(params)
    if args.verify and order != len(list_elements(params)):
        print("oracle disagreement: order formula vs element count", file=sys.stderr)
        return EXIT_ORACLE
    _emit(args, {"order": order}, str(order))
    return EXIT_OK


def _cmd_semigroup(args) -> int:
    seq = _parse_gammas(args.gammas)
    bound = parse_rational(args.bound)
    sl = semigroup_slice(seq, bound)
    if args.verify:
        for l in range(1, seq.depth + 1):
            if oracle.brute_mbar(seq.gammas[: l + 1]) != seq.derived.mbars[l - 1]:
                print("oracle disagreement: mbar mismatch", file=sys.stderr)
                return EXIT_ORACLE
    human = ["value      l  js"]
    for value, term in sl.entries:
        human.append(f"{format_rational(value):<9} {term.l:>3}  {list(term.js)}")
    human.append(f"complete up to {format_rational(sl.complete_up_to)}")
    _emit(args, sl.to_json_dict(seq), "\n".join(human))
    return EXIT_OK


def _cmd_invariant_semigroup(args) -> int:
    params = _parse_subgroup(args)
    ctx = _ctx(args, params)
    seq = _parse_gammas(args.gammas)
    bound = parse_rational(args.bound)
    sl = invariants.invariant_semigroup_slice(params, ctx, seq, bound)
    if args.verify:
        gs = build_generating_sequence(seq, _parse_lambdas(args.lambdas))
        brute = oracle.brute_invariant_values(params, ctx, gs, bound)
        if list(sl.values) != brute:
            print("oracle disagreement: invariant slice vs brute-force values",
                  file=sys.stderr)
            return EXIT_ORACLE
    human = ["value      l  js"]
    for value, term in sl.entries:
        human.append(f"{format_rational(value):<9} {term.l:>3}  {list(term.js)}")
    human.append(f"complete up to {format_rational(sl.complete_up_to)}")
    _emit(args, sl.to_json_dict(seq), "\n".join(human))
    return EXIT_OK


def _cmd_genseq(args) -> int:
    seq = _parse_gammas(args.gammas)
    gs = build_generating_sequence(seq, _parse_lambdas(args.lambdas))
    human = []
    for l, q in enumerate(gs.qs):
        human.append(f"Q_{l} = {format_polynomial(q)}")
    _emit(args, gs.to_json_dict(), "\n".join(human))
    return EXIT_OK


def _cmd_eigen(args) -> int:
    params = _parse_subgroup(args)
    report = eigen_report(parse_polynomial(args.poly), params, _ctx(args, params))
    if report.is_invariant:
        human = "invariant"
    elif report.is_eigen:
        human = f"eigenfunction, delta exponents {list(report.exponents)}"
    else:
        human = "not an eigenfunction"
    _emit(args, report.to_json_dict(), human)
    return EXIT_OK


def _cmd_value(args) -> int:
    seq = _parse_gammas(args.gammas)
    gs = build_generating_sequence(seq, _parse_lambdas(args.lambdas))
    value = valuation_of(parse_polynomial(args.poly), gs)
    _emit(args, {"value": format_rational(value)}, format_rational(value))
    return EXIT_OK


def _cmd_decide_fg(args) -> int:
    params = _parse_subgroup(args)
    seq = _parse_gammas(args.gammas) if args.gammas else None
    decision = invariants.decide_finite_generation(params, _ctx(args, params),
                                                   seq, args.depth)
    lines = [f"verdict: {decision.verdict.value} "
             f"(gcd(m/i, n/j) = {decision.gcd}, t = {decision.t})"]
    if decision.verdict is invariants.Verdict.FINITELY_GENERATED:
        if decision.witness_theoretical:
            lines.append("witness: theoretical (no sequence supplied)")
        else:
            lines.append(f"witness: first invariant key polynomial at N = {decision.witness_N}")
    if decision.divisibility_failures:
        rendered = ", ".join(f"d({l}) = {d}" for l, d in decision.divisibility_failures)
        lines.append(f"verified n/j does not divide: {rendered}")
    if decision.failing_q2:
        lines.append(f"obstruction: Q_2 = {decision.failing_q2} is not an eigenfunction")
    _emit(args, decision.to_json_dict(), "\n".join(lines))
    return EXIT_OK


def _cmd_construct(args) -> int:
    params = _parse_subgroup(args)
    ctx = _ctx(args, params)
    if params.t == 1:
        trace = invariants.construct_valuation_t1(params, args.depth)
    else:
        trace = invariants.construct_valuation_tgt1(params, ctx, args.depth)
    if args.verify:
        report = invariants.verify_structure_invariants(params, ctx, trace)
        if report.applicable and not report.passed:
            print("oracle disagreement: structure invariants failed on a "
                  "constructed trace", file=sys.stderr)
            return EXIT_ORACLE
    data = trace.to_json_dict()
    human = [f"case: {data['case']}",
             f"gammas: {', '.join(data['gammas'])}",
             f"mbars: {data['mbars']}"]
    if trace.case == "t1":
        human.append(f"q: {data['q']}  c: {data['c']}")
    else:
        human.append(f"(r, s) = ({data['r']}, {data['s']}), primes {data['r_primes']}, "
                     f"a = {data['a']}, b = {data['b']}")
    for l, q_text in enumerate(data["qs"]):
        human.append(f"Q_{l} = {q_text}")
    _emit(args, data, "\n".join(human))
    return EXIT_OK


def _cmd_splitting(args) -> int:
    params = _parse_subgroup(args)
    seq = _parse_gammas(args.gammas)
    report = splitting.splitting_report(params, _ctx(args, params), seq, args.depth)
    if report.certified:
        human = (f"certified: e = MNt = {report.mnt} at depth {report.depth} "
                 f"(unique extension, f = r = 1)")
    else:
        human = (f"inconclusive at depth {report.depth}: e_truncated = "
                 f"{report.e_truncated} < MNt = {report.mnt}")
    _emit(args, report.to_json_dict(), human)
    return EXIT_OK if report.certified else EXIT_INCONCLUSIVE


def _cmd_verify_structure(args) -> int:
    params = _parse_subgroup(args)
    seq = _parse_gammas(args.gammas)
    report = invariants.verify_structure_invariants(params, _ctx(args, params),
                                                    seq, args.depth)
    lines = [f"branch: {report.branch}  passed: {report.passed}"]
    if report.note:
        lines.append(report.note)
    for check in report.checks:
        status = "ok " if check.passed else "FAIL"
        where = f" k={check.index}" if check.index is not None else ""
        lines.append(f"  [{status}] {check.name}{where}: {check.detail}")
    _emit(args, report.to_json_dict(), "\n".join(lines))
    return EXIT_OK


_COMMANDS = {
    "subgroups": _cmd_subgroups,
    "order": _cmd_order,
    "semigroup": _cmd_semigroup,
    "invariant-semigroup": _cmd_invariant_semigroup,
    "genseq": _cmd_genseq,
    "eigen": _cmd_eigen,
    "value": _cmd_value,
    "decide-fg": _cmd_decide_fg,
    "construct": _cmd_construct,
    "splitting": _cmd_splitting,
    "verify-structure": _cmd_verify_structure,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
