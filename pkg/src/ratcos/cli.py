"""Command-line front end with deterministic JSON and DOT output.

Subcommands: psi, cyclotomic, dynatomic, iterate, factor-iterate,
factor, classify, membership, bound, verify.  JSON goes to stdout and
validates against the schema shipped in ``schemas/output.schema.json``;
DOT goes to the file named by ``--dot``.  All output is byte-identical
across runs for fixed flags and seed.

Exit codes: 0 success, 1 verification failure, 2 usage error (argparse),
3 size cap exceeded, 4 invalid input, 5 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .classify import (
    build_digraph,
    classify_by_degree,
    min_poly_of,
    preper_bound,
    value_label,
)
from .cyclotomic import cyclotomic_poly, psi
from .dynatomic import (
    DEFAULT_DYNATOMIC_CAP,
    DEFAULT_ITERATE_CAP,
    dynatomic_poly,
    dynatomic_psi_factors,
    iterate_f,
    iterate_minus_x_psi_factors,
)
from .errors import CapExceededError, InvalidInputError
from .factorz import DEFAULT_DEGREE_CAP, factor_over_integers
from .numfield import NumberField, cosine_values_in_field
from .numtheory import DEFAULT_FACTOR_CAP, totient_summatory
from .polycore import RatPoly, parse_int_poly
from .verify import run_checks

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_INVALID = 4
EXIT_INTERNAL = 5


def _rat_json(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _rat_coeffs_json(p: RatPoly) -> list[dict]:
    return [_rat_json(c) for c in p.coeffs]


def _envelope(command: str, inputs: dict, results: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }


def _print_json(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"bad rational {text!r}") from exc


def _angle_string(a, convention: str) -> str:
    if convention == "rpi":
        num, den = a.rpi_form()
        return f"{num}/{den}"
    return f"{a.m}/{a.n}"


def _graph_json(graph, convention: str) -> dict:
    return {
        "edges": [
            {"from": _angle_string(v, convention), "to": _angle_string(graph.successor(v), convention)}
            for v in graph.vertices
        ],
        "cycles": [
            [_angle_string(v, convention) for v in cycle] for cycle in graph.cycles()
        ],
        "components": len(graph.components()),
    }


def _write_dot(graph, path: str, labeler) -> None:
    Path(path).write_text(graph.to_dot(labeler), encoding="ascii")


# -- subcommand handlers -----------------------------------------------------


def _cmd_psi(args) -> int:
    entry = psi(args.n)
    doc = _envelope(
        "psi",
        {"n": args.n},
        {
            "n": entry.index,
            "degree": entry.degree,
            "squared": entry.squared,
            "coeffs": list(entry.poly.coeffs),
            "pretty": entry.poly.pretty(),
        },
    )
    if args.json:
        _print_json(doc)
    else:
        print(entry.poly.coeff_csv())
        print(entry.poly.pretty())
        if entry.squared:
            print(f"(stored squared form for index {entry.index})")
    return EXIT_OK


def _cmd_cyclotomic(args) -> int:
    p = cyclotomic_poly(args.n)
    doc = _envelope(
        "cyclotomic",
        {"n": args.n},
        {"n": args.n, "degree": p.degree, "coeffs": list(p.coeffs), "pretty": p.pretty()},
    )
    if args.json:
        _print_json(doc)
    else:
        print(p.coeff_csv())
        print(p.pretty())
    return EXIT_OK


def _cmd_iterate(args) -> int:
    c = _parse_fraction(args.c)
    p = iterate_f(args.k, c, max_k=args.max_n if args.max_n else DEFAULT_ITERATE_CAP)
    doc = _envelope(
        "iterate",
        {"k": args.k, "c": _rat_json(c)},
        {"degree": p.degree, "coeffs": _rat_coeffs_json(p), "pretty": p.pretty()},
    )
    if args.json:
        _print_json(doc)
    else:
        print(p.pretty())
    return EXIT_OK


def _cmd_dynatomic(args) -> int:
    c = _parse_fraction(args.c)
    p = dynatomic_poly(args.n, c, max_n=args.max_n if args.max_n else DEFAULT_DYNATOMIC_CAP)
    results = {"degree": p.degree, "coeffs": _rat_coeffs_json(p), "pretty": p.pretty()}
    if c == -2:
        # the closed-form psi factorization exists only at c = -2
        shape = dynatomic_psi_factors(args.n, seed=args.seed, factor_cap=args.factor_cap)
        results["factors"] = [
            {
                "psi_index": n,
                "exponent": mult,
                "degree": poly.degree,
                "coeffs": list(poly.coeffs),
                "pretty": poly.pretty(),
            }
            for n, mult, poly in shape.factor_list()
        ]
    doc = _envelope("dynatomic", {"n": args.n, "c": _rat_json(c)}, results)
    if args.json:
        _print_json(doc)
    else:
        print(p.pretty())
        if c == -2:
            for f in results["factors"]:
                mult = "" if f["exponent"] == 1 else f"^{f['exponent']}"
                print(f"  ({f['pretty']}){mult}   [psi {f['psi_index']}, degree {f['degree']}]")
    return EXIT_OK


def _cmd_factor_iterate(args) -> int:
    shape = iterate_minus_x_psi_factors(args.d, seed=args.seed, factor_cap=args.factor_cap)
    factors = [
        {
            "psi_index": n,
            "multiplicity": mult,
            "degree": poly.degree,
            "coeffs": list(poly.coeffs),
            "pretty": poly.pretty(),
        }
        for n, mult, poly in shape.factor_list()
    ]
    doc = _envelope(
        "factor-iterate",
        {"d": args.d},
        {"degree": shape.degree(), "factors": factors},
    )
    if args.json:
        _print_json(doc)
    else:
        print(f"f^({args.d})(x) - x factors as:")
        for f in factors:
            mult = "" if f["multiplicity"] == 1 else f"^{f['multiplicity']}"
            print(f"  ({f['pretty']}){mult}   [psi {f['psi_index']}, degree {f['degree']}]")
    return EXIT_OK


def _cmd_factor(args) -> int:
    p = parse_int_poly(args.poly)
    fac = factor_over_integers(p, max_degree=args.max_degree, seed=args.seed)
    factors = [
        {
            "coeffs": list(f.coeffs),
            "pretty": f.pretty(),
            "multiplicity": m,
            "degree": f.degree,
        }
        for f, m in fac.factors
    ]
    doc = _envelope(
        "factor",
        {"poly": list(p.coeffs)},
        {"unit": fac.unit, "content": fac.content, "factors": factors},
    )
    if args.json:
        _print_json(doc)
    else:
        head = []
        if fac.unit == -1:
            head.append("-1")
        if fac.content != 1:
            head.append(str(fac.content))
        lead = " * ".join(head)
        print(f"{p.pretty()} =" + (f" {lead} *" if lead else ""))
        for f in factors:
            mult = "" if f["multiplicity"] == 1 else f"^{f['multiplicity']}"
            print(f"  ({f['pretty']}){mult}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    values = classify_by_degree(args.d)
    graph = build_digraph(values)
    entries = [
        {
            "n": v.angle.n,
            "m": v.angle.m,
            "angle": _angle_string(v.angle, args.angles),
            "degree": v.degree,
            "min_poly": list(v.min_poly.coeffs),
            "label": value_label(v.angle),
        }
        for v in values
    ]
    results = {
        "degree": args.d,
        "bound": preper_bound(args.d),
        "count": len(values),
        "values": entries,
    }
    results.update(_graph_json(graph, args.angles))
    doc = _envelope("classify", {"degree": args.d, "angles": args.angles}, results)
    if args.dot:
        _write_dot(graph, args.dot, value_label)
    if args.json:
        _print_json(doc)
    else:
        print(f"{len(values)} values of degree dividing {args.d} "
              f"(bound {results['bound']}):")
        for e in entries:
            print(f"  {e['angle']}  degree {e['degree']}  {e['label']}")
        cyc = "; ".join(" -> ".join(c) for c in results["cycles"])
        print(f"{results['components']} orbit component(s); cycles: {cyc}")
    return EXIT_OK


def _cmd_membership(args) -> int:
    g = parse_int_poly(args.poly)
    field = NumberField(g, seed=args.seed)
    pairs, graph = cosine_values_in_field(field, seed=args.seed)
    element_label = {a: e for a, e in pairs}
    entries = [
        {
            "n": a.n,
            "m": a.m,
            "angle": _angle_string(a, args.angles),
            "degree": min_poly_of(a).degree,
            "min_poly": list(min_poly_of(a).min_poly.coeffs),
            "element": [_rat_json(c) for c in elem.coeffs],
            "element_pretty": elem.pretty(),
            "label": value_label(a),
        }
        for a, elem in pairs
    ]
    results = {
        "field": {"poly": list(g.coeffs), "degree": field.degree, "pretty": g.pretty("y")},
        "bound": preper_bound(field.degree),
        "count": len(pairs),
        "values": entries,
    }
    results.update(_graph_json(graph, args.angles))
    doc = _envelope(
        "membership",
        {"poly": list(g.coeffs), "angles": args.angles},
        results,
    )
    if args.dot:
        _write_dot(graph, args.dot, lambda a: element_label[a].pretty())
    if args.json:
        _print_json(doc)
    else:
        print(f"{len(pairs)} cosine values in QQ[y]/({g.pretty('y')}):")
        for e in entries:
            print(f"  {e['angle']}  =  {e['element_pretty']}")
        print(f"{results['components']} orbit component(s)")
    return EXIT_OK


def _cmd_bound(args) -> int:
    limit = 8 * args.d * args.d
    value = totient_summatory(limit)
    doc = _envelope(
        "bound",
        {"degree": args.d},
        {"degree": args.d, "scan_limit": limit, "bound": value},
    )
    if args.json:
        _print_json(doc)
    else:
        print(value)
    return EXIT_OK


def _cmd_verify(args) -> int:
    checks = run_checks(args.n)
    all_passed = all(c.passed for c in checks)
    doc = _envelope(
        "verify",
        {"max_n": args.n},
        {
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
            ],
            "all_passed": all_passed,
        },
    )
    if args.json:
        _print_json(doc)
    else:
        for c in checks:
            print(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}")
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


# -- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratcos",
        description="Exact classification of cosine values at rational multiples of pi.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON to stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for all randomized internals")
    common.add_argument(
        "--max-degree", type=int, default=DEFAULT_DEGREE_CAP,
        help="polynomial factorization degree cap",
    )
    common.add_argument(
        "--max-n", type=int, default=0,
        help="dynatomic/iterate index cap (0 keeps the per-command default)",
    )
    common.add_argument(
        "--factor-cap", type=int, default=DEFAULT_FACTOR_CAP,
        help="integer factorization size cap",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", parents=[common], help="minimal polynomial of 2cos(2pi/n)")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_psi)

    p = sub.add_parser("cyclotomic", parents=[common], help="n-th cyclotomic polynomial")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_cyclotomic)

    p = sub.add_parser("iterate", parents=[common], help="k-fold iterate of x^2 + c")
    p.add_argument("k", type=int)
    p.add_argument("--c", default="-2", help="parameter c as P/Q (default -2)")
    p.set_defaults(func=_cmd_iterate)

    p = sub.add_parser("dynatomic", parents=[common], help="n-th dynatomic polynomial of x^2 + c")
    p.add_argument("n", type=int)
    p.add_argument("--c", default="-2", help="parameter c as P/Q (default -2)")
    p.set_defaults(func=_cmd_dynatomic)

    p = sub.add_parser(
        "factor-iterate", parents=[common],
        help="closed-form factorization of f^(D)(x) - x at c = -2",
    )
    p.add_argument("d", type=int)
    p.set_defaults(func=_cmd_factor_iterate)

    p = sub.add_parser("factor", parents=[common], help="factor an integer polynomial")
    p.add_argument("--poly", required=True, help="ascending comma-separated coefficients")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser(
        "classify", parents=[common],
        help="all cosine values of degree dividing D with orbit digraphs",
    )
    p.add_argument("d", type=int)
    p.add_argument("--dot", help="write DOT digraphs to this file")
    p.add_argument("--angles", choices=("2pi", "rpi"), default="2pi",
                   help="angle display convention")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser(
        "membership", parents=[common],
        help="cosine values lying in QQ[y]/(g) for monic irreducible g",
    )
    p.add_argument("--poly", required=True, help="coefficients of g, ascending")
    p.add_argument("--dot", help="write DOT digraphs to this file")
    p.add_argument("--angles", choices=("2pi", "rpi"), default="2pi")
    p.set_defaults(func=_cmd_membership)

    p = sub.add_parser("bound", parents=[common], help="cardinality bound for degree D")
    p.add_argument("d", type=int)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("verify", parents=[common], help="run the cross-module identity suite")
    p.add_argument("n", type=int, nargs="?", default=6)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvalidInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
