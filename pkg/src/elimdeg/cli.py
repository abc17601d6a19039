"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 precondition violation,
4 render error, 5 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import CommonFactorError, InvariantError, ParseError, PreconditionError
from .geometry import LatticePolygon
from .mixed_area import METHODS, all_methods, bounds_report, finck_degree, mixed_area
from .polynomial import Polynomial, parse_pattern, parse_polynomial, support
from .puiseux import minding_degree, newton_polygon
from .resultant import check_prediction, resultant_polynomial
from .subdivision import build_subdivision, straighten_strips, validate_subdivision
from .svg import polygon_svg, subdivision_svg
from .systems import derive_seed

EXIT_PARSE, EXIT_PRECONDITION, EXIT_RENDER, EXIT_INTERNAL = 2, 3, 4, 5


class RenderError(Exception):
    pass


def _frac(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _read(arg: str) -> str:
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            return fh.read().strip()
    return arg


def load_polynomials(args) -> list[Polynomial]:
    out = []
    for i, raw in enumerate(args.inputs):
        text = _read(raw)
        if args.pattern:
            out.append(parse_pattern(text, derive_seed(args.seed, i), args.bound))
        else:
            out.append(parse_polynomial(text))
    return out


def load_polygons(args) -> list[LatticePolygon]:
    """Polygon JSON ({"vertices": ...}) or polynomial text (Newton polygon)."""
    out = []
    for i, raw in enumerate(args.inputs):
        text = _read(raw)
        if text.lstrip().startswith("{"):
            out.append(LatticePolygon.from_json(json.loads(text)))
        elif args.pattern:
            out.append(newton_polygon(parse_pattern(text, derive_seed(args.seed, i), args.bound)))
        else:
            out.append(newton_polygon(parse_polynomial(text)))
    return out


def _need(items, count, what):
    if len(items) != count:
        raise PreconditionError(f"expected {count} {what}, got {len(items)}")
    return items


def cmd_parse(args):
    p = load_polynomials(args)[0]
    sup = sorted(support(p), key=lambda e: (-e[1], -e[0]))
    data = {"polynomial": p.to_text(), "support": [list(e) for e in sup], "seed": args.seed}
    text = f"{p.to_text()}\nsupport: {json.dumps(data['support'])}"
    return data, text


def cmd_predict(args):
    f, theta = _need(load_polynomials(args), 2, "polynomials")
    report = minding_degree(f, theta, args.eliminate, args.k_source)
    data = report.to_json()
    finck = finck_degree(f, theta) if args.eliminate == "y" else finck_degree(f.swap_variables(), theta.swap_variables())
    data["finck"] = finck.to_json()
    data["finck_consistent"] = finck.applicable and finck.degree == report.degree
    data["seed"] = args.seed
    hs = ", ".join(f"{_frac(c.h)} x{c.multiplicity}" for c in report.classes)
    ks = ", ".join(_frac(k) for k in report.k_values)
    text = (
        f"eliminate {report.eliminate}: m={report.m} n={report.n} b={report.b}\n"
        f"h: {hs}\nk: {ks}\ndegree: {report.degree}"
    )
    if data["finck_consistent"]:
        text += " (finck-consistent)"
    for w in report.warnings:
        text += f"\nwarning: {w}"
    return data, text


def cmd_mixed_area(args):
    P, Q = _need(load_polygons(args), 2, "inputs")
    if args.method == "all":
        values = all_methods(P, Q)
    else:
        values = {args.method: mixed_area(P, Q, args.method).value}
    present = {v for v in values.values() if v is not None}
    data = {k: (_frac(v) if v is not None else "n/a") for k, v in values.items()}
    data = {k: (int(v) if v.lstrip("-").isdigit() else v) for k, v in data.items()}
    data["agree"] = len(present) == 1
    data["seed"] = args.seed
    text = "\n".join(f"{k}: {v}" for k, v in data.items())
    return data, text


def cmd_subdivide(args):
    P, Q = _need(load_polygons(args), 2, "inputs")
    alpha = tuple(int(v) for v in args.alpha.split(",")) if args.alpha else None
    sub = build_subdivision(P, Q, alpha)
    report = validate_subdivision(sub, P, Q)
    strips = straighten_strips(sub, Q)
    data = sub.to_json()
    data["areas"] = [_frac(c.area) for c in sub.cells]
    data["mixed_area"] = _frac(sub.mixed_area())
    data["valid"] = report.ok
    data["warnings"] = report.warnings
    data["strips"] = [
        {"edge": list(s.edge), "ell": _frac(s.ell), "area": _frac(s.area), "cells": list(s.cells)} for s in strips.strips
    ]
    data["distinguished_cell"] = strips.distinguished_cell
    data["seed"] = args.seed
    lines = [f"alpha = {sub.alpha}"]
    for c in sub.cells:
        lines.append(f"{c.kind:11s} area {_frac(c.area):>6s}  {list(c.polygon.vertices)}")
    for s in strips.strips:
        lines.append(f"strip over edge {s.edge}: area {_frac(s.area)}, ell = {_frac(s.ell)}")
    lines.append(f"mixed cells total {_frac(sub.mixed_area())}")
    svg = subdivision_svg(sub)
    return data, "\n".join(lines), svg


def cmd_resultant(args):
    f, theta = _need(load_polynomials(args), 2, "polynomials")
    psi = resultant_polynomial(f, theta, args.eliminate)
    var = "x" if args.eliminate == "y" else "y"
    data = {
        "eliminate": args.eliminate,
        "psi": psi.to_text(var),
        "primitive": psi.primitive().to_text(var),
        "degree": psi.degree,
        "seed": args.seed,
    }
    return data, f"degree {psi.degree}\n{data['psi']}"


def cmd_check(args):
    f, theta = _need(load_polynomials(args), 2, "polynomials")
    report = check_prediction(f, theta, args.eliminate, args.k_source)
    data = report.to_json()
    data["seed"] = args.seed
    text = "\n".join(f"{k}: {v}" for k, v in data.items())
    return data, text


def cmd_bounds(args):
    f, theta = _need(load_polynomials(args), 2, "polynomials")
    data = bounds_report(f, theta)
    data["seed"] = args.seed
    return data, "\n".join(f"{k}: {v}" for k, v in data.items())


def cmd_svg(args):
    polys = load_polygons(args)
    if not polys:
        raise RenderError("nothing to render")
    if len(polys) == 1:
        svg = polygon_svg(polys[0])
    else:
        P, Q = _need(polys, 2, "inputs")
        svg = subdivision_svg(build_subdivision(P, Q))
    return None, None, svg


COMMANDS = {
    "parse": cmd_parse,
    "predict": cmd_predict,
    "mixed-area": cmd_mixed_area,
    "subdivide": cmd_subdivide,
    "resultant": cmd_resultant,
    "check": cmd_check,
    "bounds": cmd_bounds,
    "svg": cmd_svg,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="elimdeg", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("inputs", nargs="*", help="polynomial text, polygon JSON, or @file")
    parser.add_argument("--pattern", action="store_true", help="inputs contain (x^mu) blocks")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--bound", type=int, default=99, help="coefficient range for pattern blocks")
    parser.add_argument("--eliminate", choices=("x", "y"), default="y")
    parser.add_argument("--method", choices=("all",) + METHODS, default="all")
    parser.add_argument("--k-source", choices=("support", "polygon"), default="support")
    parser.add_argument("--alpha", help="lifting vector for subdivide, e.g. 1,50")
    parser.add_argument("--format", choices=("json", "text", "svg"), default=None)
    parser.add_argument("--out", help="write output here instead of stdout")
    return parser


def _emit(args, data, text, svg=None):
    fmt = args.format or ("svg" if args.command == "svg" else "json")
    if fmt == "svg":
        if svg is None:
            raise RenderError(f"{args.command} has no SVG output")
        out = svg
    elif fmt == "text":
        out = (text if text is not None else json.dumps(data)) + "\n"
    else:
        if data is None:
            raise RenderError(f"{args.command} only produces SVG")
        out = json.dumps(data, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_intermixed_args(argv)
    try:
        if args.command != "svg" and not args.inputs:
            raise PreconditionError("no inputs given")
        result = COMMANDS[args.command](args)
        _emit(args, *result)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, CommonFactorError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except RenderError as exc:
        print(f"render error: {exc}", file=sys.stderr)
        return EXIT_RENDER
    except (InvariantError, ArithmeticError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return 0


if __name__ == "__main__":
    sys.exit(main())
