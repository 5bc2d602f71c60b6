"""``coxshadow`` command line.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 unsupported input.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import adlv as adlv_mod
from .affineweyl import AffineWeylGroup, InputError, affine_weyl_group
from .galleries import minimal_vertex_gallery
from .lsmodel import character_csv, ls_galleries
from .orientations import AtInfinity, format_orientation, parse_orientation
from .render import RenderSpec, UnsupportedRender, render_svg
from .rootdata import ConfigurationError, PreconditionError, Weight, freudenthal_multiplicities
from .shadows import shadow_brute, shadow_json, shadow_recursive, verify_convexity
from .treebuilding import build_ball, convexity_check, to_dot

OK, FAILED, USAGE, UNSUPPORTED = 0, 1, 2, 3


class Unsupported(Exception):
    pass


class Usage(Exception):
    pass


def _group(tag: str) -> AffineWeylGroup:
    try:
        return affine_weyl_group(tag)
    except ConfigurationError as exc:
        raise Unsupported(str(exc)) from exc


def _coords(W: AffineWeylGroup, text: str) -> Weight:
    d = W.datum
    text = text.strip()
    if text == "theta":
        return d.theta_vee
    if text == "rho":
        if any(c % 2 for c in d.rho_vee2):
            raise Unsupported(f"rho^vee is not in the coroot lattice of {d.type_tag}")
        return tuple(c // 2 for c in d.rho_vee2)
    try:
        v = tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise Usage(f"bad coordinates {text!r}") from exc
    if len(v) != d.rank:
        raise Usage(f"expected {d.rank} coordinates, got {len(v)}")
    return v


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_shadow(args) -> int:
    W = _group(args.type)
    word = W.parse_word(args.word or "")
    if not W.is_reduced(word):
        raise Usage(f"word {args.word!r} is not reduced")
    x = W.from_word(word)
    o = parse_orientation(W, args.orientation)
    status = OK
    if args.algorithm in ("recursive", "both") and not isinstance(o, AtInfinity):
        raise Unsupported("the recursions need a winf: orientation")
    if args.algorithm == "recursive":
        res = shadow_recursive(W, x, o)
    else:
        res = shadow_brute(W, x, o, word)
        if args.algorithm == "both" and shadow_recursive(W, x, o).elements != res.elements:
            status = FAILED
        if args.verify and shadow_brute(W, x, o, word, method="masks").elements != res.elements:
            status = FAILED
    if args.format == "svg":
        spec = RenderSpec(W.datum.type_tag, max(args.radius or 0, len(word)),
                          highlight={"element": frozenset([x]), "shadow": res.elements})
        _emit(args, render_svg(W, spec))
    elif args.format == "csv":
        rows = ["word,length"] + [
            f"{' '.join(map(str, w)) or 'e'},{len(w)}" for w in shadow_json(W, res, word)["shadow"]
        ]
        _emit(args, "\n".join(rows) + "\n")
    else:
        out = shadow_json(W, res, word)
        out["algorithm"] = args.algorithm
        out["consistent"] = status == OK
        _emit(args, _dump(out))
    return status


def cmd_character(args) -> int:
    W = _group(args.type)
    lam = _coords(W, args.lambda_ or "theta")
    gals = ls_galleries(W, lam)
    char = dict(sorted(Counter(g.end_vertex for g in gals).items()))
    status = OK
    if args.verify:
        want = {k: v for k, v in freudenthal_multiplicities(W.datum, lam).items() if v}
        if want != char:
            status = FAILED
    if args.format == "csv":
        _emit(args, character_csv(char))
    elif args.format == "svg":
        radius = max(args.radius or 0, len(minimal_vertex_gallery(W, lam).type_word))
        spec = RenderSpec(W.datum.type_tag, radius, vertices={"shadow": frozenset(char)})
        _emit(args, render_svg(W, spec))
    else:
        _emit(args, _dump({
            "type_tag": W.datum.type_tag,
            "lambda": list(lam),
            "dimension": sum(char.values()),
            "galleries": [g.to_json(W) for g in gals],
            "character": [{"weight": list(k), "multiplicity": v} for k, v in char.items()],
        }))
    return status


def cmd_adlv(args) -> int:
    W = _group(args.type)
    mu = _coords(W, args.mu) if args.mu else W.datum.zero
    try:
        if args.radius is not None and not args.word:
            rows = adlv_mod.adlv_table(W, args.radius, mu)
            if args.format == "svg":
                lit = frozenset(W.from_word(r.word) for r in rows if r.nonempty)
                _emit(args, render_svg(W, RenderSpec(W.datum.type_tag, args.radius, highlight={"nonempty": lit})))
            elif args.format == "csv":
                _emit(args, "\n".join([adlv_mod.CSV_HEADER] + [r.csv() for r in rows]) + "\n")
            else:
                _emit(args, _dump({
                    "type_tag": W.datum.type_tag,
                    "mu": list(mu),
                    "offset_policy": adlv_mod.OFFSET_POLICY,
                    "rows": [
                        {
                            "word": list(r.word),
                            "length": r.length,
                            "nonempty": r.nonempty,
                            "raw_dim": r.raw_dim,
                            "witness_u": None if r.witness_u is None else list(r.witness_u),
                            "witness_mask": None if r.witness_mask is None else list(r.witness_mask),
                        }
                        for r in rows
                    ],
                }))
            return OK
        x = W.from_word(W.parse_word(args.word or ""))
        rep = adlv_mod.adlv_nonempty(W, x, mu)
        out = rep.to_json(W)
        out["type_tag"] = W.datum.type_tag
        if args.verify:
            out["mst"] = adlv_mod.mst_relation_report(W, x, mu).to_json()
        _emit(args, _dump(out))
        return OK
    except adlv_mod.ConsistencyError as exc:
        print(f"coxshadow: {exc}", file=sys.stderr)
        return FAILED


def cmd_tree(args) -> int:
    if args.q < 2:
        raise Usage("--q must be at least 2")
    if args.n < 0:
        raise Usage("--n must be non-negative")
    radius = max(args.radius or 0, args.n)
    t = build_ball(args.q, radius)
    rep = convexity_check(t, args.n)
    if args.format == "dot":
        _emit(args, to_dot(t))
    else:
        _emit(args, _dump(rep.to_json()))
    return OK if rep.ok else FAILED


def cmd_convexity(args) -> int:
    W = _group(args.type)
    lam = _coords(W, args.lambda_ or "theta")
    rep = verify_convexity(W, lam)
    if args.format == "svg":
        radius = max(args.radius or 0, len(minimal_vertex_gallery(W, lam).type_word))
        spec = RenderSpec(W.datum.type_tag, radius, vertices={"shadow": rep.shadow, "hull": rep.hull - rep.shadow})
        _emit(args, render_svg(W, spec))
    else:
        out = rep.to_json()
        out["type_tag"] = W.datum.type_tag
        out["orientation"] = format_orientation(W, AtInfinity(W.datum.finite_weyl.longest))
        _emit(args, _dump(out))
    return OK if rep.ok else FAILED


def cmd_datum(args) -> int:
    _emit(args, _group(args.type).datum.dumps() + "\n")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxshadow", description="Folded galleries in affine Coxeter complexes.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, formats=("json", "csv", "svg")):
        sp.add_argument("--type", default="A2~", help="A1~, A2~, C2~, G2~ or A3~")
        sp.add_argument("--format", choices=formats, default="json")
        sp.add_argument("--out", help="write here instead of stdout")
        sp.add_argument("--radius", type=int, help="view radius (svg) or table radius")
        sp.add_argument("--verify", action="store_true", help="run the independent oracle as well")

    sp = sub.add_parser("shadow", help="shadow of an element under an orientation")
    common(sp)
    sp.add_argument("--word", default="", help="reduced word, e.g. 1,0")
    sp.add_argument("--orientation", default="winf:w0", help="triv+, triv-, alcove:<word>, winf:<word>")
    sp.add_argument("--algorithm", choices=("brute", "recursive", "both"), default="brute")
    sp.set_defaults(func=cmd_shadow)

    sp = sub.add_parser("character", help="LS-gallery character of a dominant coweight")
    common(sp)
    sp.add_argument("--lambda", dest="lambda_", help="coords, 'theta' or 'rho'")
    sp.set_defaults(func=cmd_character)

    sp = sub.add_parser("adlv", help="nonemptiness and raw dimensions for b = t^mu")
    common(sp)
    sp.add_argument("--word", help="x as a word; omit with --radius for a table")
    sp.add_argument("--mu", help="coords, 'theta' or 'rho' (default 0)")
    sp.set_defaults(func=cmd_adlv)

    sp = sub.add_parser("tree", help="retractions of the (q+1)-regular tree")
    common(sp, formats=("json", "dot"))
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--n", type=int, default=2)
    sp.set_defaults(func=cmd_tree)

    sp = sub.add_parser("convexity", help="vertex shadow against the convex hull of W0.lambda")
    common(sp, formats=("json", "svg"))
    sp.add_argument("--lambda", dest="lambda_", help="coords, 'theta' or 'rho'")
    sp.set_defaults(func=cmd_convexity)

    sp = sub.add_parser("datum", help="root datum as JSON")
    common(sp, formats=("json",))
    sp.set_defaults(func=cmd_datum)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Unsupported as exc:
        print(f"coxshadow: unsupported: {exc}", file=sys.stderr)
        return UNSUPPORTED
    except UnsupportedRender as exc:
        print(f"coxshadow: unsupported: {exc}", file=sys.stderr)
        return UNSUPPORTED
    except (Usage, InputError, PreconditionError) as exc:
        print(f"coxshadow: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
