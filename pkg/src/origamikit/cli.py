"""Command-line front end: ``origami <command> [origami] [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import degeneration, domain, elliptic, moduli, veech
from .algebra.ratfunc import RatFunc
from .algebra.scalars import ParseError, format_scalar, parse_scalar
from .errors import VerificationError
from .origami import (
    CATALOG_TEXT,
    SCHEMA,
    Origami,
    automorphisms,
    canonical_form,
    catalog,
    cylinders,
    genus,
    get_origami,
    origami_from_json,
    stratum,
    vertex_profile,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --- input ------------------------------------------------------------------

def load_origami(args) -> Origami:
    if (args.origami is None) == (args.file is None):
        raise UsageError("give exactly one origami: a catalog name, inline text, or --file PATH")
    if args.file is not None:
        text = Path(args.file).read_text()
        if text.lstrip().startswith("{"):
            return origami_from_json(text)
        return get_origami(text.strip())
    return get_origami(args.origami)


def _origami_json(o: Origami) -> dict:
    d = o.to_json()
    d.pop("schema")
    return d


def _point_json(p) -> list[str]:
    return [format_scalar(x) for x in p]


# --- reports ----------------------------------------------------------------

def report_info(o: Origami) -> dict:
    prof = vertex_profile(o)
    aut = automorphisms(o)
    return {
        "origami": _origami_json(o),
        "genus": genus(o),
        "stratum": list(stratum(o)),
        "n_vertices": prof.n_vertices,
        "vertices": [{"squares": list(c), "cone_angle": len(c)} for c in prof.vertices],
        "translations": [str(p) for p in aut.translations],
        "automorphism_order": aut.order,
        "has_minus_identity": aut.has_involution_minus_identity,
        "canonical_form": list(canonical_form(o)),
    }


def text_info(r: dict) -> str:
    o = r["origami"]
    zeros = ", ".join(map(str, r["stratum"])) or "no zeros"
    lines = [
        f"origami {o['name'] or ''} d={o['d']} h={o['h']} v={o['v']}".replace("  ", " "),
        f"genus: {r['genus']}",
        f"stratum: H({zeros})" if r["stratum"] else "stratum: H(0) (no zeros)",
        f"vertices: {r['n_vertices']}",
    ]
    for v in r["vertices"]:
        lines.append(f"  cone angle {v['cone_angle']}*2pi at lower-left corners of squares {v['squares']}")
    lines.append(f"translations: {', '.join(r['translations'])}")
    lines.append(f"automorphisms: {r['automorphism_order']} (-I realised: {'yes' if r['has_minus_identity'] else 'no'})")
    return "\n".join(lines)


def report_cylinders(o: Origami, direction: str) -> dict:
    return {
        "origami": _origami_json(o),
        "direction": direction,
        "cylinders": [
            {"width": c.width, "height": c.height, "squares": sorted(c.squares)} for c in cylinders(o, direction)
        ],
    }


def text_cylinders(r: dict) -> str:
    name = "horizontal" if r["direction"] == "h" else "vertical"
    lines = [f"{len(r['cylinders'])} {name} cylinders"]
    for c in r["cylinders"]:
        lines.append(f"  {c['width']}x{c['height']}  squares {c['squares']}")
    return "\n".join(lines)


def report_veech(o: Origami) -> tuple[dict, bool]:
    res = veech.veech_group(o)
    gens = []
    ok = True
    for w, m in res.generators:
        member = veech.is_member(w, o)
        ok &= member
        gens.append({"word": str(w), "matrix": m.rows(), "verified": member})
    data = {
        "origami": _origami_json(o),
        "index": res.index,
        "psl_index": res.psl_index,
        "contains_minus_identity": res.contains_minus_identity,
        "coset_representatives": [str(w) for w in res.coset_reps],
        "generators": gens,
        "cusps": [{"width": c.width, "representative": str(c.representative)} for c in res.cusps],
        "e2": res.e2,
        "e3": res.e3,
        "quotient_genus": res.quotient_genus,
    }
    return data, ok


def text_veech(r: dict) -> str:
    lines = [
        f"index in SL2(Z): {r['index']}  (PSL2(Z): {r['psl_index']})",
        f"-I in group: {'yes' if r['contains_minus_identity'] else 'no'}",
        f"coset representatives: {', '.join(r['coset_representatives'])}",
        "generators:",
    ]
    for g in r["generators"]:
        (a, b), (c, d) = g["matrix"]
        mark = "ok" if g["verified"] else "NOT IN GROUP"
        lines.append(f"  {g['word']:<14} [[{a}, {b}], [{c}, {d}]]  {mark}")
    lines.append(f"cusps: {len(r['cusps'])}")
    for c in r["cusps"]:
        lines.append(f"  width {c['width']}  representative {c['representative']}")
    lines.append(f"elliptic points: order 2: {r['e2']}, order 3: {r['e3']}")
    lines.append(f"quotient genus: {r['quotient_genus']}")
    return "\n".join(lines)


def report_domain(o: Origami) -> tuple[dict, domain.FundamentalDomain]:
    fd = domain.fundamental_domain(veech.veech_group(o), o)

    def z(p):
        return "oo" if p is domain.INFINITY else format_scalar(p)

    data = {
        "origami": _origami_json(o),
        "triangles": fd.n_faces,
        "edges": fd.n_edges,
        "vertices": fd.n_vertices,
        "cusp_vertices": fd.n_cusp_vertices,
        "fold_points": fd.n_fold_points,
        "euler_characteristic": fd.euler_characteristic,
        "genus": fd.genus,
        "tiles": [{"word": str(t.word), "vertices": [z(p) for p in t.vertices]} for t in fd.tiles],
        "pairings": [
            {
                "from": [p.tile_from, p.side_from],
                "to": [p.tile_to, p.side_to],
                "element": str(p.element),
            }
            for p in fd.pairings
        ],
    }
    return data, fd


def text_domain(r: dict) -> str:
    lines = [
        f"triangles: {r['triangles']}  edges: {r['edges']}  vertices: {r['vertices']}"
        f"  (cusps {r['cusp_vertices']}, fold points {r['fold_points']})",
        f"Euler characteristic: {r['euler_characteristic']}  genus: {r['genus']}",
        "tiles:",
    ]
    for k, t in enumerate(r["tiles"]):
        lines.append(f"  {k}: {t['word']:<6} vertices {', '.join(t['vertices'])}")
    lines.append("side pairings:")
    for p in r["pairings"]:
        lines.append(f"  tile {p['from'][0]} {p['from'][1]} -> tile {p['to'][0]} {p['to'][1]}  by {p['element']}")
    return "\n".join(lines)


def report_boundary(o: Origami) -> tuple[dict, list]:
    res = veech.veech_group(o)
    cusps = []
    graphs = []
    for c in res.cusps:
        g = degeneration.stable_curve(veech.apply_word(c.representative, o), "h")
        graphs.append(g)
        cusps.append(
            {
                "width": c.width,
                "representative": str(c.representative),
                "graph": g.to_json(),
                "arithmetic_genus": degeneration.arithmetic_genus(g),
            }
        )
    distinct = degeneration.cusp_boundary_points(o, res)
    data = {
        "origami": _origami_json(o),
        "cusps": cusps,
        "distinct_boundary_points": len(distinct),
        "all_distinct": len(distinct) == len(res.cusps),
    }
    return data, graphs


def text_boundary(r: dict) -> str:
    lines = []
    for c in r["cusps"]:
        g = c["graph"]
        lines.append(
            f"cusp {c['representative']} (width {c['width']}): components with genera {g['genera']},"
            f" nodes {[tuple(e) for e in g['edges']]}, arithmetic genus {c['arithmetic_genus']}"
        )
    verdict = "pairwise distinct" if r["all_distinct"] else "not all distinct"
    lines.append(f"boundary points: {r['distinct_boundary_points']} ({verdict})")
    return "\n".join(lines)


def report_curve_verify() -> tuple[dict, bool]:
    rec = elliptic.family_record()
    lam = RatFunc.var()
    control = elliptic.family_record(lam / (lam + 2))
    try:
        deriv = moduli.verify_curve_equation_derivation()
        deriv_ok, deriv_msg = True, None
    except VerificationError as exc:
        deriv, deriv_ok, deriv_msg = None, False, str(exc)
    data = {
        "relation": "m*(l + 1) - l = 0",
        "mu": str(rec.mu),
        "curve": {k: str(getattr(rec.curve, k)) for k in ("a1", "a2", "a3", "a4", "a6")},
        "checks": [{"identity": n, "passed": ok, "value": str(res)} for n, ok, res in rec.checks],
        "negative_control": {
            "mu": str(control.mu),
            "first_failure": control.failures()[0][0] if control.failures() else None,
            "residual": str(control.failures()[0][1]) if control.failures() else None,
        },
        "polynomial_identities": {
            "passed": deriv_ok,
            "error": deriv_msg,
            "factor_components": [f"{t[0]}[{t[1]:+d},{t[2]:+d}]" for t in deriv.factor_tags] if deriv else [],
        },
    }
    control_ok = data["negative_control"]["first_failure"] == "x([2]P1) = 0"
    return data, rec.passed and deriv_ok and control_ok


def text_curve_verify(r: dict) -> str:
    c = r["curve"]
    lines = [
        f"family: mu = {r['mu']}, i.e. {r['relation']}",
        f"curve: a1={c['a1']} a2={c['a2']} a3={c['a3']} a4={c['a4']} a6={c['a6']}",
    ]
    for ch in r["checks"]:
        lines.append(f"  {'PASS' if ch['passed'] else 'FAIL'}  {ch['identity']}" + ("" if ch["passed"] else f"  residual {ch['value']}"))
    nc = r["negative_control"]
    lines.append(f"negative control mu = {nc['mu']}: first failure {nc['first_failure']}, residual {nc['residual']}")
    pi = r["polynomial_identities"]
    if pi["passed"]:
        lines.append(f"polynomial identities: PASS, factors {', '.join(pi['factor_components'])}")
    else:
        lines.append(f"polynomial identities: FAIL: {pi['error']}")
    return "\n".join(lines)


def report_locus(points: list[tuple]) -> dict:
    G = moduli.gamma_group()
    v = moduli.V()
    stab = moduli.stabilizer_of_locus(v)
    sqrt3_point = moduli.param_point(-2 + moduli.QuadElt.sqrt(3), -2 - moduli.QuadElt.sqrt(3))

    def point_data(p):
        s = moduli.stabilizer_of_point(p)
        return {
            "point": _point_json(p),
            "orbit_size": len(moduli.orbit_of_point(p)),
            "stabilizer_order": s.order,
            "stabilizer": s.labels,
        }

    special = moduli.SPECIAL_POINTS
    data = {
        "group_order": G.order,
        "relations": [{"relation": f"{l} = {r or 'id'}", "holds": ok} for l, r, ok in G.relations],
        "v4_normal": G.v4_normal,
        "quotient_order": G.quotient_order,
        "orbit_of_V": [{"name": x.name, "equation": x.poly.to_string()} for x in moduli.orbit_of_locus(v)],
        "stabilizer_of_V": {"order": stab.order, "abelian": stab.is_abelian, "elements": stab.labels},
        "intersections": [
            {"with": X.name, "points": [_point_json(p) for p in moduli.intersect_loci(v, X)]}
            for X in moduli.all_components()
            if X != v
        ],
        "special_points": {k: point_data(special[k]) for k in ("q1", "r1")},
        "same_orbit_q1_sqrt3_point": moduli.same_orbit(special["q1"], sqrt3_point),
        "points": [point_data(p) for p in points],
    }
    return data


def text_locus(r: dict) -> str:
    bad = [x["relation"] for x in r["relations"] if not x["holds"]]
    lines = [
        f"group order: {r['group_order']}; relations: {'all hold' if not bad else 'FAILED ' + ', '.join(bad)}",
        f"<d, e> normal: {'yes' if r['v4_normal'] else 'no'}; quotient order {r['quotient_order']}",
        f"orbit of V ({len(r['orbit_of_V'])} components):",
    ]
    for x in r["orbit_of_V"]:
        lines.append(f"  {x['name']}: {x['equation']} = 0")
    s = r["stabilizer_of_V"]
    lines.append(f"stabilizer of V: order {s['order']}, {'abelian' if s['abelian'] else 'nonabelian'}: {', '.join(s['elements'])}")
    lines.append("intersections with V:")
    for x in r["intersections"]:
        pts = "; ".join(f"({a}, {b})" for a, b in x["points"]) or "empty in P"
        lines.append(f"  {x['with']}: {pts}")
    for name, p in list(r["special_points"].items()) + [(f"p{k}", p) for k, p in enumerate(r["points"], 1)]:
        lines.append(
            f"{name} = ({p['point'][0]}, {p['point'][1]}): orbit {p['orbit_size']},"
            f" stabilizer order {p['stabilizer_order']}: {', '.join(p['stabilizer'])}"
        )
    lines.append(f"q1 and (-2+sqrt(3), -2-sqrt(3)) in the same orbit: {'yes' if r['same_orbit_q1_sqrt3_point'] else 'no'}")
    return "\n".join(lines)


def report_catalog() -> dict:
    out = []
    for name, o in catalog().items():
        out.append({"name": name, "text": CATALOG_TEXT[name], "d": o.d, "genus": genus(o), "stratum": list(stratum(o))})
    return {"catalog": out}


def text_catalog(r: dict) -> str:
    return "\n".join(f"{c['name']:<10} d={c['d']:<2} genus {c['genus']}  {c['text']}" for c in r["catalog"])


# --- driver -----------------------------------------------------------------

def _parse_point(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError("a point is written 'l,m'", text, 0)
    return moduli.param_point(parse_scalar(parts[0]), parse_scalar(parts[1]))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="origami", description="Invariants of square-tiled surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_origami(name: str, help_: str, formats=("text", "json")) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("origami", nargs="?", help="catalog name or inline text 'h=(...); v=(...)'")
        sp.add_argument("--file", help="read the origami from a text or JSON file")
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--output", "-o", help="write to this path instead of stdout")
        return sp

    with_origami("info", "genus, stratum, vertices, automorphisms")
    with_origami("cylinders", "cylinder decomposition").add_argument("--dir", choices=("h", "v"), default="h")
    with_origami("veech", "Veech group, cusps and quotient genus")
    with_origami("domain", "fundamental domain", ("text", "json", "svg")).add_argument("--svg", help="also write an SVG")
    with_origami("boundary", "stable curves at the cusps", ("text", "json", "dot"))
    for name, help_ in (("curve-verify", "symbolic 3-torsion verification"), ("catalog", "list catalog origamis")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--output", "-o")
    sp = sub.add_parser("locus", help="the parameter-space group, orbits and intersections")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--output", "-o")
    sp.add_argument("--point", action="append", default=[], help="extra point 'l,m' in exact notation")
    return p


def _emit(args, data: dict | None, text: str) -> None:
    if args.format == "json":
        body = {"schema": SCHEMA, "command": args.command}
        body.update(data)
        out = json.dumps(body, indent=2) + "\n"
    else:
        out = text if text.endswith("\n") else text + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "catalog":
        r = report_catalog()
        _emit(args, r, text_catalog(r))
        return EXIT_OK
    if cmd == "curve-verify":
        r, ok = report_curve_verify()
        _emit(args, r, text_curve_verify(r))
        if not ok:
            print("verification failed", file=sys.stderr)
        return EXIT_OK if ok else EXIT_FAILED
    if cmd == "locus":
        r = report_locus([_parse_point(t) for t in args.point])
        _emit(args, r, text_locus(r))
        ok = r["group_order"] == 48 and all(x["holds"] for x in r["relations"])
        return EXIT_OK if ok else EXIT_FAILED

    o = load_origami(args)
    if cmd == "info":
        r = report_info(o)
        _emit(args, r, text_info(r))
    elif cmd == "cylinders":
        r = report_cylinders(o, args.dir)
        _emit(args, r, text_cylinders(r))
    elif cmd == "veech":
        r, ok = report_veech(o)
        _emit(args, r, text_veech(r))
        if not ok:
            print("a Schreier generator failed the membership test", file=sys.stderr)
            return EXIT_FAILED
    elif cmd == "domain":
        r, fd = report_domain(o)
        if args.svg:
            Path(args.svg).write_text(fd.to_svg())
        if args.format == "svg":
            args.format = "text"
            _emit(args, None, fd.to_svg())
        else:
            _emit(args, r, text_domain(r))
    elif cmd == "boundary":
        r, graphs = report_boundary(o)
        if args.format == "dot":
            args.format = "text"
            _emit(args, None, "".join(g.to_dot(f"cusp{k}") for k, g in enumerate(graphs)))
        else:
            _emit(args, r, text_boundary(r))
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"origami: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"origami: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"origami: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, OSError) as exc:
        print(f"origami: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
