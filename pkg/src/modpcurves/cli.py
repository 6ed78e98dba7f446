"""Command-line front end.

Exit codes: 0 success, 1 computed-check failure (verify / compare mismatch),
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, is_dataclass

from .arith import factor
from .cubic import (analyze_cubic, index_form, mordell_reduction, parse_cubic,
                    s3_serre_conductor, solve_index_equation)
from .fixtures import parse_pair
from .frobenius import ap
from .modp import (compare_reps, serre_conductor_semistable, sturm_bound,
                   trace_vector)
from .mordell import scan_twisted_mordell, search_mordell
from .quadorder import QuadraticOrderElement, compute_obstruction
from .tate import conductor, tate_local
from .verify import verify_all, verify_file
from .weierstrass import discriminant, invariants, minimal_model, parse_curve


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(_plain(payload), sort_keys=True))
    else:
        print(text)


def _plain(obj):
    if is_dataclass(obj) and not isinstance(obj, type):
        return _plain(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_plain(v) for v in sorted(obj) if isinstance(obj, (set, frozenset))] \
            if isinstance(obj, (set, frozenset)) else [_plain(v) for v in obj]
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return str(obj)


def _signed_str(n: int) -> str:
    f = factor(abs(n))
    return ("-" if n < 0 else "") + str(f)


def cmd_curve_info(args) -> int:
    E = parse_curve(args.curve)
    Emin, (u, r, s, t) = minimal_model(E)
    inv = invariants(Emin)
    N = conductor(E)
    locals_ = [tate_local(Emin, p) for p, _ in factor(discriminant(Emin)).factors]
    text = [f"model:        {E}",
            f"minimal:      {Emin}   (u,r,s,t) = {(u, r, s, t)}",
            f"c4, c6:       {inv.c4}, {inv.c6}",
            f"disc:         {inv.discriminant} = {_signed_str(inv.discriminant)}",
            f"conductor:    {N.value()} = {N}"]
    for ld in locals_:
        text.append(f"  at {ld.prime}: {ld.reduction}, {ld.kodaira}, "
                    f"f = {ld.conductor_exponent}, v(disc) = {ld.discriminant_valuation}")
    _emit(args, {"model": str(E), "minimal": str(Emin), "c4": inv.c4,
                 "c6": inv.c6, "disc": inv.discriminant, "conductor": str(N),
                 "local": locals_}, "\n".join(text))
    return 0


def cmd_ap(args) -> int:
    E = parse_curve(args.curve)
    val = ap(E, args.ell)
    _emit(args, {"ell": args.ell, "ap": val}, f"a_{args.ell} = {val}")
    return 0


def cmd_trace_table(args) -> int:
    E = parse_curve(args.curve)
    tv = trace_vector(E, args.p, args.bound)
    _emit(args, {"p": args.p, "entries": list(tv.entries)}, tv.serialize())
    return 0


def cmd_serre_conductor(args) -> int:
    E = parse_curve(args.curve)
    sd = serre_conductor_semistable(E, args.p)
    notes = "; ".join(f"{ell}: {note}" for ell, note in sd.ramification_notes)
    _emit(args, {"p": args.p, "serre_conductor": str(sd.serre_conductor),
                 "notes": list(sd.ramification_notes)},
          f"N(rhobar) = {sd.serre_conductor}  [{notes}]")
    return 0


def cmd_compare(args) -> int:
    A = trace_vector(parse_curve(args.curve), args.p, args.bound)
    B = trace_vector(parse_curve(args.other), args.p, args.bound)
    result = compare_reps(A, B)
    sturm = sturm_bound(max(conductor(parse_curve(args.curve)).value(),
                            conductor(parse_curve(args.other)).value()))
    if result == "match-up-to-bound":
        _emit(args, {"result": result, "sturm_bound": sturm},
              f"match up to bound {args.bound} (Sturm horizon {sturm})")
        return 0
    _, ell = result
    _emit(args, {"result": "mismatch", "ell": ell},
          f"mismatch at ell = {ell}")
    return 1


def cmd_cubic_info(args) -> int:
    K = analyze_cubic(parse_cubic(args.poly))
    form = index_form(K)
    basis = ["1"]
    for row in K.integral_basis[1:]:
        terms = []
        for coef, name in zip(row, ("1", "u", "u^2")):
            if coef:
                terms.append(f"{coef}*{name}" if coef != 1 else name)
        basis.append(" + ".join(terms))
    text = [f"poly disc:    {K.poly_discriminant}",
            f"field disc:   {K.field_discriminant} = {_signed_str(K.field_discriminant)}",
            f"index of u:   {K.index_of_generator}",
            f"basis:        {{{', '.join(basis)}}}",
            f"index form:   {form.coefficients}",
            f"odd Serre:    {s3_serre_conductor(K)}"]
    try:
        mr = mordell_reduction(K)
        text.append(f"mordell k:    {mr.k} ({mr.scaling})")
    except Exception:
        pass
    _emit(args, {"poly_disc": K.poly_discriminant,
                 "field_disc": K.field_discriminant,
                 "index": K.index_of_generator,
                 "index_form": list(form.coefficients)}, "\n".join(text))
    return 0


def cmd_index_solve(args) -> int:
    K = analyze_cubic(parse_cubic(args.poly))
    primes = {int(t) for t in args.primes.split(",")} if args.primes else set()
    sols, report = solve_index_equation(K, primes, args.bound)
    lines = ["no solutions" if not sols else
             "; ".join(f"(x,y)=({x},{y}) index {v}" for x, y, v in sols)]
    lines.extend(f"sieve: {c}" for c in report.conclusions)
    _emit(args, {"solutions": [list(s) for s in sols],
                 "conclusions": list(report.conclusions)}, "\n".join(lines))
    return 0


def cmd_mordell(args) -> int:
    S = {int(t) for t in args.S.split(",")} if args.S else set()
    pts = search_mordell(args.k, S, args.height, args.exponent_bound)
    if not pts:
        _emit(args, {"points": []}, "no points in box")
    else:
        _emit(args, {"points": [[P.x_num, P.y_num, P.denom] for P in pts]},
              "\n".join(f"({P.x}, {P.y})" for P in pts))
    return 0


def cmd_scan_twisted(args) -> int:
    S = {int(t) for t in args.S.split(",")} if args.S else set()
    report = scan_twisted_mordell(args.N, args.a_bound, args.b_bound, S,
                                  args.height, args.exponent_bound)
    hits = report.hits
    lines = [f"scanned {len(report.cases)} curves Y^2 = X^3 +- 3^a*{args.N}^b"]
    for k, pts in hits:
        lines.append(f"k = {k}: " + ", ".join(f"({P.x}, {P.y})" for P in pts))
    if not hits:
        lines.append("no points found")
    _emit(args, {"cases": len(report.cases),
                 "hits": [[k, [[P.x_num, P.y_num, P.denom] for P in pts]]
                          for k, pts in hits]}, "\n".join(lines))
    return 0


def cmd_obstruct(args) -> int:
    a, b = parse_pair(args.a)
    rep = compute_obstruction(QuadraticOrderElement(args.disc, a, b), args.ell)
    text = (f"A({args.ell}) = {rep.A_value}; norm {rep.norm} = "
            f"{factor(abs(rep.norm)) if rep.norm else 0}; "
            f"obstructed primes {sorted(rep.obstructed_primes)}"
            + ("; degenerate (rational eigenvalue)" if rep.degenerate else ""))
    _emit(args, {"norm": rep.norm,
                 "obstructed_primes": sorted(rep.obstructed_primes),
                 "degenerate": rep.degenerate}, text)
    return 0


def cmd_verify(args) -> int:
    if args.fixture:
        report = verify_file(args.fixture)
    else:
        report = verify_all(args.fixtures)
    _emit(args, {"checks": list(report.checks), "counts": report.counts},
          report.render())
    return 1 if report.failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="machine-readable output")
    common.add_argument("--fixtures", metavar="DIR", default=None,
                        help="fixture directory (default: packaged fixtures)")
    parser = argparse.ArgumentParser(
        prog="modpcurves",
        description="Elliptic curves, their mod-p fingerprints, and the "
                    "cubic-field / Mordell / level-raising toolkit around them.",
        parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("curve-info", help="invariants, conductor, local data")
    p.add_argument("curve")
    p.set_defaults(func=cmd_curve_info)

    p = add_parser("ap", help="trace of Frobenius")
    p.add_argument("curve")
    p.add_argument("ell", type=int)
    p.set_defaults(func=cmd_ap)

    p = add_parser("trace-table", help="mod-p trace vector")
    p.add_argument("curve")
    p.add_argument("p", type=int)
    p.add_argument("--bound", type=int, default=37)
    p.set_defaults(func=cmd_trace_table)

    p = add_parser("serre-conductor", help="semistable Serre conductor")
    p.add_argument("curve")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_serre_conductor)

    p = add_parser("compare", help="compare two mod-p trace vectors")
    p.add_argument("curve")
    p.add_argument("other")
    p.add_argument("p", type=int)
    p.add_argument("--bound", type=int, default=100)
    p.set_defaults(func=cmd_compare)

    p = add_parser("cubic-info", help="cubic field data")
    p.add_argument("poly")
    p.set_defaults(func=cmd_cubic_info)

    p = add_parser("index-solve", help="index form equation search")
    p.add_argument("poly")
    p.add_argument("--primes", default="")
    p.add_argument("--bound", type=int, default=1000)
    p.set_defaults(func=cmd_index_solve)

    p = add_parser("mordell", help="S-integral points on Y^2 = X^3 + k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--S", default="")
    p.add_argument("--height", type=int, default=10**4)
    p.add_argument("--exponent-bound", type=int, default=0)
    p.set_defaults(func=cmd_mordell)

    p = add_parser("scan-twisted", help="scan Y^2 = X^3 +- 3^a N^b")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--a-bound", type=int, default=5)
    p.add_argument("--b-bound", type=int, default=1)
    p.add_argument("--S", default="")
    p.add_argument("--height", type=int, default=10**4)
    p.add_argument("--exponent-bound", type=int, default=0)
    p.set_defaults(func=cmd_scan_twisted)

    p = add_parser("obstruct", help="level-raising obstruction A(ell)")
    p.add_argument("--disc", type=int, required=True,
                   help="squarefree d of the real quadratic order Z[omega]")
    p.add_argument("--a", required=True, help="a_ell as (a, b) in omega coords")
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_obstruct)

    p = add_parser("verify", help="run fixture verification")
    p.add_argument("fixture", nargs="?", default=None,
                   help="single fixture file (default: all packaged fixtures)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # domain errors (singular model, etc.)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
