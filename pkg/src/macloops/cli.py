"""Command-line front end: macloops <command> COMPLEX [...]."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import reference as ref
from .cellular import zk_homology
from .generators import generator_cycle_table
from .koszul import cohomology_basis, product_pairing_table, top_class
from .relations import PRESETS, RelationTemplate, instantiate, preset_template, solve_coefficients
from .simplicial import NotFlagError, SimplicialComplex, hochster_cohomology, polygon_boundary

EXIT_INPUT = 2
EXIT_INVARIANT = 3
COMPLEX_PRESETS = {"pentagon": 5, "hexagon": 6, "square": 4}


class InputError(Exception):
    pass


class InvariantError(Exception):
    pass


def _max_vertices() -> int:
    raw = os.environ.get("MACLOOPS_MAX_VERTICES", "12")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"MACLOOPS_MAX_VERTICES must be an integer, got {raw!r}") from None


def load_complex(spec: str) -> SimplicialComplex:
    """A preset name (pentagon, hexagon, square, simplex:<m>) or a path to complex JSON."""
    if spec in COMPLEX_PRESETS:
        K = polygon_boundary(COMPLEX_PRESETS[spec])
    elif spec.startswith("simplex:"):
        try:
            m = int(spec.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad simplex preset {spec!r}") from None
        if m < 1:
            raise InputError("simplex preset needs m >= 1")
        K = SimplicialComplex.simplex(m)
    else:
        path = Path(spec)
        if not path.is_file():
            raise InputError(f"no such complex file or preset: {spec}")
        try:
            K = SimplicialComplex.from_json(json.loads(path.read_text()))
        except json.JSONDecodeError as exc:
            raise InputError(f"{spec}: invalid JSON: {exc}") from None
        except ValueError as exc:
            raise InputError(f"{spec}: {exc}") from None
    cap = _max_vertices()
    if K.m > cap:
        raise InputError(f"complex has {K.m} vertices, above MACLOOPS_MAX_VERTICES={cap}")
    return K


def load_template(spec: str) -> tuple[RelationTemplate, str]:
    if spec in PRESETS:
        return preset_template(spec)[0], spec
    path = Path(spec)
    if not path.is_file():
        raise InputError(f"no such template file or preset: {spec} (presets: {', '.join(PRESETS)})")
    try:
        return RelationTemplate.loads(path.read_text()), path.name
    except ValueError as exc:
        raise InputError(f"{spec}: {exc}") from None


def _frac(x: Fraction) -> str:
    return str(x)


def _degrees_ok(d: int, wanted) -> bool:
    return not wanted or d in wanted


def cmd_betti(args, K: SimplicialComplex) -> tuple[dict, str]:
    hochster = hochster_cohomology(K)
    hom = zk_homology(K, integer=args.coefficients == "integer")
    agree = hochster == hom.ranks
    data = {
        "m": K.m,
        "hochster": {str(d): r for d, r in sorted(hochster.items()) if _degrees_ok(d, args.degree)},
        "cellular": {str(d): r for d, r in sorted(hom.ranks.items()) if _degrees_ok(d, args.degree)},
        "torsion": {str(d): t for d, t in sorted(hom.torsion.items())},
        "agree": agree,
    }
    lines = ["degree  hochster  cellular"]
    for d in sorted(set(hochster) | set(hom.ranks)):
        if _degrees_ok(d, args.degree):
            lines.append(f"{d:>6}  {hochster.get(d, 0):>8}  {hom.ranks.get(d, 0):>8}")
    for d, t in sorted(hom.torsion.items()):
        lines.append(f"torsion in degree {d}: {t}")
    lines.append(f"agree: {str(agree).lower()}")
    if not agree:
        raise InvariantError("Hochster and cellular ranks disagree\n" + "\n".join(lines))
    return data, "\n".join(lines)


def cmd_cohomology_ring(args, K: SimplicialComplex) -> tuple[dict, str]:
    p, q = args.p, args.q
    tabulated = ref.reference_pairings(K).get((p, q))
    if tabulated is not None:
        left, right, top = tabulated
        source = "reference"
    else:
        try:
            top = top_class(K).representative
        except ValueError as exc:
            raise InputError(str(exc)) from None
        left = [c.representative for c in cohomology_basis(K, p)]
        right = [c.representative for c in cohomology_basis(K, q)]
        source = "computed"
    if left and right and p + q != top.degree:
        raise InputError(f"p + q = {p + q} differs from the top degree {top.degree}")
    try:
        table = product_pairing_table(K, left, right, top) if left and right else []
    except ValueError as exc:
        raise InvariantError(str(exc)) from None
    data = {
        "p": p, "q": q, "basis_source": source, "top": str(top),
        "left": [str(x) for x in left], "right": [str(x) for x in right],
        "table": [[_frac(x) for x in row] for row in table],
    }
    lines = [f"t = [{top}]", f"H^{p} basis ({source}):"]
    lines += [f"  a{n + 1} = [{x}]" for n, x in enumerate(left)]
    lines.append(f"H^{q} basis ({source}):")
    lines += [f"  b{n + 1} = [{x}]" for n, x in enumerate(right)]
    lines.append("a_i * b_j = M[i][j] t:")
    lines += ["  " + " ".join(f"{_frac(x):>3}" for x in row) for row in table]
    return data, "\n".join(lines)


def cmd_generators(args, K: SimplicialComplex) -> tuple[dict, str]:
    try:
        homology = zk_homology(K, bases=ref.reference_cycle_bases(K), integer=args.coefficients == "integer")
        rows = generator_cycle_table(K, homology)
    except NotFlagError as exc:
        raise InputError(str(exc)) from None
    rows = [r for r in rows if _degrees_ok(r.descriptor.degree, args.degree)]
    bad = [str(r.descriptor) for r in rows if not r.cycle]
    data = {"count": len(rows), "generators": [r.to_json() for r in rows]}
    lines = [f"{len(rows)} generators"]
    for r in rows:
        coords = "-" if r.coords is None else "(" + ", ".join(_frac(x) for x in r.coords) + ")"
        lines.append(f"{r.descriptor.degree}  {str(r.descriptor):<16} {str(r.chain):<32} {coords}")
    if bad:
        raise InvariantError("Hurewicz chains that are not cycles: " + ", ".join(bad))
    return data, "\n".join(lines)


def _template_for(args, K: SimplicialComplex) -> tuple[RelationTemplate, str]:
    template, name = load_template(args.relation)
    if template.max_letter() > K.m:
        raise InputError(f"relation {name} uses letter {template.max_letter()} but the complex has {K.m} vertices")
    return template, name


def cmd_verify_relation(args, K: SimplicialComplex) -> tuple[dict, str]:
    template, name = _template_for(args, K)
    try:
        e = instantiate(template, K)
    except NotFlagError as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(f"{name}: {exc}") from None
    data = {"relation": name, "zero": not e, "surviving_words": len(e),
            "residue": e.to_json()}
    text = f"{name}: " + ("zero" if not e else f"nonzero, {len(e)} surviving words\n{e}")
    return data, text


def cmd_solve_coefficients(args, K: SimplicialComplex) -> tuple[dict, str]:
    template, name = _template_for(args, K)
    try:
        sol = solve_coefficients(template, K)
    except NotFlagError as exc:
        raise InputError(str(exc)) from None
    data = {"template": name, **sol.to_json()}
    lines = [f"{name}: {len(sol.ids)} unknowns, {sol.n_words} equations"]
    if not sol.consistent:
        lines.append("no solution")
    else:
        lines.append("particular: " + ", ".join(f"{k}={_frac(v)}" for k, v in zip(sol.ids, sol.particular)))
        lines.append(f"solution space dimension: {sol.dimension}")
        for v in sol.homogeneous:
            lines.append("  + span " + ", ".join(f"{k}={x}" for k, x in zip(sol.ids, v) if x))
    if template.assignment is not None and template.unknowns:
        inside = sol.consistent and sol.contains(template.assignment)
        data["contains_assignment"] = inside
        lines.append(f"template assignment is a solution: {str(inside).lower()}")
    return data, "\n".join(lines)


COMMANDS = {
    "betti": cmd_betti,
    "cohomology-ring": cmd_cohomology_ring,
    "generators": cmd_generators,
    "verify-relation": cmd_verify_relation,
    "solve-coefficients": cmd_solve_coefficients,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--coefficients", choices=["integer", "rational"], default="integer",
                        help="integer computes torsion via Smith normal form")
    common.add_argument("--degree", type=int, action="append",
                        help="restrict output to this degree (repeatable)")
    complex_help = "complex JSON file or preset: pentagon, hexagon, square, simplex:<m>"

    parser = argparse.ArgumentParser(prog="macloops", description="Homology, cohomology rings and loop "
                                     "homology relations of moment-angle complexes.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("betti", parents=[common], help="Hochster and cellular Betti numbers")
    p.add_argument("complex", help=complex_help)
    p = sub.add_parser("cohomology-ring", parents=[common], help="product pairing H^p x H^q -> top")
    p.add_argument("complex", help=complex_help)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p = sub.add_parser("generators", parents=[common], help="loop homology generators and Hurewicz cycles")
    p.add_argument("complex", help=complex_help)
    for name, helptext in [("verify-relation", "expand a relation and test it for zero"),
                           ("solve-coefficients", "solve for the unknown coefficients of a template")]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("complex", help=complex_help)
        p.add_argument("relation", help=f"template JSON file or preset: {', '.join(PRESETS)}")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        K = load_complex(args.complex)
        data, text = COMMANDS[args.command](args, K)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
