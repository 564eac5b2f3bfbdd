"""Command-line front end: fan files in, text or JSON reports out.

Exit codes: 0 success, 1 invalid fan or failed check, 2 bad arguments or
unreadable input.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from . import __version__
from .classify import theta_toric
from .cone import RationalCone, dual_cone, hilbert_basis
from .cox import cox_presentation, divisor_class_group, irrelevant_components
from .errors import InvalidFan, ParseError, SchemaError, ToritransError
from .fan import (
    Fan,
    degenerate_split,
    detect_projective_product,
    is_complete,
    is_smooth_fan,
    orbit_inventory,
    quasi_affine_envelope,
    validate,
)
from .lattice import IntVector, primitive_part
from .oracle import brute_dual_equivalence, brute_hilbert_basis, brute_hilbert_basis_pointwise, brute_surface_iso_search
from .surfaces import SurfaceForm, hypersurface_family, surface_report, surfaces_isomorphic

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


# --------------------------------------------------------------------------
# fan files
# --------------------------------------------------------------------------

@dataclass
class FanDocument:
    rank: int
    rays: List[IntVector]
    max_cones: List[List[int]]
    name: Optional[str] = None
    warnings: List[str] = field(default_factory=list)

    def to_fan(self) -> Fan:
        return Fan.from_data(self.rank, self.rays, self.max_cones, self.name)


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_fan_file(text: str) -> FanDocument:
    """Parse the JSON fan format ``{"name"?, "rank", "rays", "max_cones"}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be a JSON object")
    unknown = set(data) - {"name", "rank", "rays", "max_cones"}
    if unknown:
        raise ParseError(f"unknown field(s): {', '.join(sorted(unknown))}")
    for key in ("rank", "rays", "max_cones"):
        if key not in data:
            raise ParseError(f"missing field '{key}'")
    name, rank, rays, cones = data.get("name"), data["rank"], data["rays"], data["max_cones"]
    if name is not None and not isinstance(name, str):
        raise ParseError("field 'name' must be a string")
    if not _is_int(rank) or rank < 1:
        raise ParseError("field 'rank' must be a positive integer")
    if not isinstance(rays, list) or not all(isinstance(r, list) and all(map(_is_int, r)) for r in rays):
        raise ParseError("field 'rays' must be a list of integer lists")
    if not isinstance(cones, list) or not all(isinstance(c, list) and all(map(_is_int, c)) for c in cones):
        raise ParseError("field 'max_cones' must be a list of integer lists")

    warnings = []
    norm: List[IntVector] = []
    for i, r in enumerate(rays):
        if len(r) != rank:
            raise SchemaError(f"rays[{i}] has length {len(r)}, expected {rank}")
        if not any(r):
            raise SchemaError(f"rays[{i}] is the zero vector")
        p = primitive_part(r)
        if list(p) != r:
            warnings.append(f"rays[{i}] = {r} normalized to {list(p)}")
        norm.append(p)
    seen: Dict[IntVector, int] = {}
    for i, p in enumerate(norm):
        if p in seen:
            raise SchemaError(f"rays[{i}] duplicates rays[{seen[p]}] after normalization")
        seen[p] = i
    for j, c in enumerate(cones):
        for idx in c:
            if not 0 <= idx < len(rays):
                raise SchemaError(f"max_cones[{j}] refers to ray index {idx}, but there are {len(rays)} rays")
    return FanDocument(rank, norm, [list(c) for c in cones], name, warnings)


def fan_to_dict(f: Fan) -> dict:
    out = {"rank": f.rank, "rays": [list(r) for r in f.rays], "max_cones": [sorted(c) for c in f.max_cones]}
    if f.name:
        out["name"] = f.name
    return out


def parse_cone_arg(text: str) -> RationalCone:
    """``"1,0;1,2"`` -> ``Cone((1,0),(1,2))``."""
    try:
        gens = [tuple(int(x) for x in part.split(",")) for part in text.split(";") if part.strip()]
    except ValueError:
        raise ParseError(f"cannot read cone generators from {text!r}; expected e.g. '1,0;1,2'") from None
    if not gens:
        raise ParseError("a cone needs at least one generator")
    if len({len(g) for g in gens}) != 1:
        raise ParseError("all generators must have the same length")
    return RationalCone.from_generators(gens)


# --------------------------------------------------------------------------
# report assembly
# --------------------------------------------------------------------------

def _vectors(vs) -> List[List[int]]:
    return [list(v) for v in vs]


def _cone_dict(sigma: RationalCone) -> dict:
    return {
        "rank": sigma.rank,
        "generators": _vectors(sigma.generators),
        "inequalities": _vectors(sigma.inequalities),
        "dim": sigma.dim,
        "pointed": sigma.is_pointed,
    }


def _class_group_dict(f: Fan) -> dict:
    cl = divisor_class_group(f)
    return {
        "group": cl.describe(),
        "free_rank": cl.free_rank,
        "torsion": list(cl.torsion),
        "degrees": [list(cl.degree(i)) for i in range(len(f.rays))],
    }


def _verdict_section(f: Fan) -> dict:
    return theta_toric(f).to_dict()


def cmd_validate(f: Fan, args) -> Tuple[dict, int]:
    problems = validate(f)
    return {"valid": not problems, "violations": problems}, EXIT_INVALID if problems else EXIT_OK


def cmd_analyze(f: Fan, args) -> Tuple[dict, int]:
    problems = validate(f)
    if problems:
        return {"valid": False, "violations": problems}, EXIT_INVALID
    k, _ = degenerate_split(f)
    qa, omega = quasi_affine_envelope(f)
    out = {
        "valid": True,
        "fan": fan_to_dict(f),
        "complete": is_complete(f),
        "smooth": is_smooth_fan(f),
        "quasi_affine": qa,
        "envelope": _vectors(omega.generators) if qa else None,
        "torus_factor": k,
        "projective_product": detect_projective_product(f),
        "class_group": _class_group_dict(f) if k == 0 else None,
        "verdict": _verdict_section(f),
    }
    return out, EXIT_OK


def cmd_theta(f: Fan, args) -> Tuple[dict, int]:
    f.require_valid()
    return {"verdict": _verdict_section(f)}, EXIT_OK


def cmd_cox(f: Fan, args) -> Tuple[dict, int]:
    cox = cox_presentation(f)
    return {
        "class_group": _class_group_dict(f),
        "irrelevant_monomials": _vectors(cox.irrelevant_monomials),
        "irrelevant_components": [list(c) for c in irrelevant_components(cox)],
        "quasitorus_relations": _vectors(cox.quasitorus_relations),
        "summary": cox.summary(),
    }, EXIT_OK


def cmd_orbits(f: Fan, args) -> Tuple[dict, int]:
    f.require_valid()
    return {
        "orbits": [{"cone": _vectors(s.generators), "orbit_dim": d} for s, d in orbit_inventory(f)]
    }, EXIT_OK


def cmd_dual(args) -> Tuple[dict, int]:
    sigma = parse_cone_arg(args.cone)
    return {"cone": _cone_dict(sigma), "dual": _cone_dict(dual_cone(sigma))}, EXIT_OK


def cmd_hilbert(args) -> Tuple[dict, int]:
    sigma = parse_cone_arg(args.cone)
    return {"cone": _cone_dict(sigma), "hilbert_basis": _vectors(hilbert_basis(sigma))}, EXIT_OK


def _form(a: int, b: int) -> SurfaceForm:
    return SurfaceForm(a, b)


def cmd_surface(args) -> Tuple[dict, int]:
    return surface_report(_form(args.a, args.b)).to_dict(), EXIT_OK


def cmd_iso_surface(args) -> Tuple[dict, int]:
    s, t = _form(args.a, args.b), _form(args.a2, args.b2)
    return {"first": [s.a, s.b], "second": [t.a, t.b], "isomorphic": surfaces_isomorphic(s, t)}, EXIT_OK


def cmd_family(args) -> Tuple[dict, int]:
    return hypersurface_family(args.n, args.b).to_dict(), EXIT_OK


def cmd_verify(args) -> Tuple[dict, int]:
    if args.check == "iso":
        a, b, a2, b2 = args.values
        s, t = _form(a, b), _form(a2, b2)
        bound = args.bound or max(s.b, t.b)
        witness = brute_surface_iso_search(s, t, bound)
        main = surfaces_isomorphic(s, t)
        agree = main == (witness is not None)
        out = {"criterion": main, "witness": _vectors(witness) if witness else None, "bound": bound, "agree": agree}
        return out, EXIT_OK if agree else EXIT_INVALID
    if args.cone is None:
        raise ParseError(f"verify {args.check} needs --cone")
    sigma = parse_cone_arg(args.cone)
    if args.check == "dual":
        bound = args.bound or 6
        ok = brute_dual_equivalence(sigma, dual_cone(sigma), bound)
        return {"cone": _cone_dict(sigma), "bound": bound, "agree": ok}, EXIT_OK if ok else EXIT_INVALID
    main = sorted(hilbert_basis(sigma))
    if sigma.rank == 2:
        bound = args.bound or max(abs(c) for g in sigma.generators for c in g)
        brute = brute_hilbert_basis(sigma, bound)
    else:
        bound = args.bound
        brute = brute_hilbert_basis_pointwise(sigma, bound)
    ok = brute == main
    out = {"hilbert_basis": _vectors(main), "oracle": _vectors(brute), "bound": bound, "agree": ok}
    return out, EXIT_OK if ok else EXIT_INVALID


FAN_COMMANDS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "theta": cmd_theta,
    "cox": cmd_cox,
    "orbits": cmd_orbits,
}
OTHER_COMMANDS = {
    "dual": cmd_dual,
    "hilbert": cmd_hilbert,
    "surface": cmd_surface,
    "iso-surface": cmd_iso_surface,
    "family": cmd_family,
    "verify": cmd_verify,
}


# --------------------------------------------------------------------------
# rendering
# --------------------------------------------------------------------------

def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def _scalar(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
        return "[" + ", ".join(map(str, v)) + "]"
    if isinstance(v, list) and all(isinstance(x, list) and all(isinstance(y, int) for y in x) for x in v):
        return "[" + ", ".join("(" + ", ".join(map(str, x)) + ")" for x in v) + "]"
    return str(v)


def _text_lines(obj: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    lines = []
    for key, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{key}:")
            lines += _text_lines(v, indent + 1)
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{pad}{key}:")
            for x in v:
                if set(x) == {"fact", "citation"}:
                    lines.append(f"{pad}  - {x['fact']}  [{x['citation']}]")
                else:
                    sub = _text_lines(x, indent + 2)
                    sub[0] = f"{pad}  - " + sub[0].lstrip()
                    lines += sub
        else:
            lines.append(f"{pad}{key}: {_scalar(v)}")
    return lines


def render_text(report: dict) -> str:
    return "\n".join(_text_lines(report)) + "\n"


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toritrans", description="Toric fans, cones and transitivity degrees.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("validate", "check the fan axioms"),
        ("analyze", "full pipeline: validity, completeness, envelope, class group, verdict"),
        ("theta", "transitivity-degree verdict with certificates"),
        ("cox", "class group and quotient presentation"),
        ("orbits", "torus orbits and their dimensions"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("fan_file")
    for name, help_text in [("dual", "dual cone"), ("hilbert", "Hilbert basis of a pointed cone")]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--cone", required=True, help="generators as 'x,y;x,y'")
    p = sub.add_parser("surface", help="report on the surface X_{a,b}")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p = sub.add_parser("iso-surface", help="isomorphism test for X_{a,b} and X_{a2,b2}")
    for dest in ("a", "b", "a2", "b2"):
        p.add_argument(dest, type=int)
    p = sub.add_parser("family", help="hypersurface x_{n+1}^b = x_1...x_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p = sub.add_parser("verify", help="compare a computation with its brute-force oracle")
    p.add_argument("check", choices=("hilbert", "dual", "iso"))
    p.add_argument("values", nargs="*", type=int, help="A B A2 B2 for 'iso'")
    p.add_argument("--cone")
    p.add_argument("--bound", type=_positive)
    return parser


def run_command(argv: Sequence[str]) -> Tuple[int, str, List[str]]:
    """Run one command; returns ``(exit code, rendered report, warnings)``."""
    parser = build_parser()
    args = parser.parse_args(list(argv))
    warnings: List[str] = []
    render = render_json if args.format == "json" else render_text
    echo = {"command": args.command}
    try:
        if args.command in FAN_COMMANDS:
            echo["fan_file"] = args.fan_file
            try:
                with open(args.fan_file, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise ParseError(f"{args.fan_file}: {exc.strerror}") from None
            doc = parse_fan_file(text)
            warnings += doc.warnings
            result, code = FAN_COMMANDS[args.command](doc.to_fan(), args)
        else:
            if args.command == "verify" and args.check == "iso" and len(args.values) != 4:
                raise ParseError("verify iso needs four integers A B A2 B2")
            result, code = OTHER_COMMANDS[args.command](args)
    except InvalidFan as exc:
        result, code = {"valid": False, "violations": exc.violations}, EXIT_INVALID
    except ToritransError as exc:
        result, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_USAGE
    report = {"command": echo, "result": result, "warnings": warnings}
    return code, render(report), warnings


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out, warnings = run_command(sys.argv[1:] if argv is None else argv)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
