"""Command line interface: ``okounkov <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import polytope as poly
from .errors import OkounkovError, ValidationError
from .exactalg import format_polynomial
from .nobody import compare_with_reference, reference_polytope
from .patterns import fflv_polytope, gz_lattice, gz_polytope
from .rootdata import DominantWeight, GroupType, degree_oracle, weyl_dim
from .schubertcell import build_cell
from .valuation import fundamental_space, product_generators, span_valuation_image, valuation_image


def _weight(args) -> DominantWeight:
    try:
        lam = tuple(Fraction(x.strip()) for x in args.weight.split(","))
    except ValueError as exc:
        raise ValidationError(f"bad --weight {args.weight!r}: {exc}") from exc
    return DominantWeight(GroupType(args.type.upper(), args.rank), lam)


def _read_polytope(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return poly.loads(text)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=1))


def _group_args(p: argparse.ArgumentParser, weight: bool = True) -> None:
    p.add_argument("--type", required=True, choices=list("ABCDabcd"))
    p.add_argument("--rank", required=True, type=int)
    if weight:
        p.add_argument("--weight", required=True,
                       help="comma-separated orthogonal coordinates, e.g. 2,1 or 1/2,1/2")


def cmd_dim(args) -> int:
    print(weyl_dim(_weight(args)))
    return 0


def cmd_degree(args) -> int:
    print(degree_oracle(_weight(args)))
    return 0


def cmd_cell(args) -> int:
    cell = build_cell(GroupType(args.type.upper(), args.rank))
    matrix = [[format_polynomial(cell.entry(i, j)) for j in range(1, cell.n + 1)]
              for i in range(1, cell.n + 1)]
    if args.format == "json":
        _emit({
            "group": str(cell.group),
            "n": cell.n,
            "d": cell.d,
            "matrix": matrix,
            "independent_positions": [list(p) for p in cell.independent_positions],
            "y_order": [list(p) for p in cell.y_order],
        })
    else:
        for t, pos in enumerate(cell.y_order, start=1):
            print(f"y{t} = x{pos[0]},{pos[1]}")
        for row in matrix:
            print("\t".join(row))
    return 0


def cmd_valuation_image(args) -> int:
    w = _weight(args)
    cell = build_cell(w.group)
    m = w.multiplicities()
    used = [(k, mk) for k, mk in enumerate(m, start=1) if mk]
    if not used:
        _emit([[0] * cell.d])
        return 0
    spaces = [fundamental_space(cell, k) for k, _ in used]
    gens = product_generators(spaces, [mk for _, mk in used], product_cap=args.product_cap)
    if args.k_products:
        pts = valuation_image(gens, cell.order)
    else:
        pts = span_valuation_image(gens, cell.order)
    _emit([list(p) for p in sorted(pts)])
    return 0


def cmd_hull(args) -> int:
    p = _read_polytope(args.file)
    v = p if isinstance(p, poly.VPolytope) else p.vpolytope
    _emit(poly.to_json(poly.v_to_h(v) if args.hrep else v))
    return 0


def cmd_volume(args) -> int:
    p = _read_polytope(args.file)
    vol = poly.lattice_normalized_volume(p) if args.relative else poly.normalized_volume(p)
    print(vol)
    return 0


def cmd_ehrhart(args) -> int:
    p = _read_polytope(args.file)
    if args.polynomial:
        print(" ".join(str(c) for c in poly.ehrhart_polynomial(p)))
        return 0
    ks = [int(k) for k in args.k.split(",")]
    for k in ks:
        print(f"{k}\t{poly.ehrhart_count(p, k)}")
    return 0


def cmd_compare(args) -> int:
    a, b = _read_polytope(args.a), _read_polytope(args.b)
    _emit({
        "equal": poly.equals(a, b),
        "a_contains_b": poly.contains(a, b),
        "b_contains_a": poly.contains(b, a),
        "a_f_vector": list(poly.f_vector(a)),
        "b_f_vector": list(poly.f_vector(b)),
    })
    return 0


def _pattern(args, build, lattice) -> int:
    w = _weight(args)
    h = build(w)
    out = poly.to_json(h)
    if args.lattice_points:
        out["lattice_points"] = poly.count_lattice_points(h, lattice(w))
    if args.volume:
        out["normalized_volume"] = str(poly.normalized_volume(h))
    _emit(out)
    return 0


def cmd_gz(args) -> int:
    return _pattern(args, gz_polytope, gz_lattice)


def cmd_fflv(args) -> int:
    return _pattern(args, fflv_polytope, lambda w: None)


def cmd_certify(args) -> int:
    from .report import certification_to_dict

    w = _weight(args)
    ref = None
    if args.reference in ("fflv", "gz"):
        ref = reference_polytope(w, args.reference)
    elif args.reference:
        ref = _read_polytope(args.reference)
    rep = compare_with_reference(w, ref)
    _emit(certification_to_dict(rep))
    ok = rep.result.certified and (ref is None or rep.verdict == "equal")
    return 0 if ok else 1


def cmd_report(args) -> int:
    from . import report

    grid = args.grid or report.default_grid_path()
    entries = report.load_grid(grid)
    rows = report.run_grid(entries, jobs=args.jobs)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    report.write_tsv(rows, out / "report.tsv")
    report.write_json(rows, out / "report.json")
    if not args.no_figures:
        report.render_figures(rows, out)
    print(report.format_table(rows))
    return 0 if all(report.row_ok(r) for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="okounkov", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, hlp in (("dim", cmd_dim, "dimension of the irreducible representation"),
                          ("degree", cmd_degree, "degree of the flag variety in the embedding")):
        p = sub.add_parser(name, help=hlp)
        _group_args(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("cell", help="Schubert cell matrix")
    _group_args(p, weight=False)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_cell)

    p = sub.add_parser("valuation-image", help="valuations of sections of a weight")
    _group_args(p)
    p.add_argument("--k-products", action="store_true",
                   help="valuations of the product generators only, not of their span")
    p.add_argument("--product-cap", type=int, default=10**6)
    p.set_defaults(func=cmd_valuation_image)

    p = sub.add_parser("hull", help="irredundant vertices (or facets) of a polytope file")
    p.add_argument("file")
    p.add_argument("--hrep", action="store_true")
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("volume", help="normalized volume of a polytope file")
    p.add_argument("file")
    p.add_argument("--relative", action="store_true", help="lattice volume inside the affine hull")
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("ehrhart", help="lattice-point counts of dilates")
    p.add_argument("file")
    p.add_argument("--k", default="1,2,3")
    p.add_argument("--polynomial", action="store_true", help="print coefficients, constant first")
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("compare", help="equality and inclusion of two polytope files")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_compare)

    for name, fn in (("gz", cmd_gz), ("fflv", cmd_fflv)):
        p = sub.add_parser(name, help=f"{name.upper()} polytope as JSON H-rep")
        _group_args(p)
        p.add_argument("--lattice-points", action="store_true")
        p.add_argument("--volume", action="store_true")
        p.set_defaults(func=fn)

    p = sub.add_parser("certify", help="certify the body of one weight")
    _group_args(p)
    p.add_argument("--reference", help="fflv, gz, or a polytope JSON file")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("report", help="certify a weight grid; write TSV, JSON and figures")
    p.add_argument("--grid", help="TOML grid file (default: the packaged grid)")
    p.add_argument("--out", default="okounkov-report")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (OkounkovError, ValueError, IndexError, OSError) as exc:
        print(f"okounkov: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
