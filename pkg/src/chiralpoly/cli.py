"""Command-line entry point: generate, analyze, group, verify."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import export
from .coxeter import GROUP_ORDER, DiagramId, build_system, generators, verify_relations
from .mesh import DegenerateInputError, analyze, build_faces, chirality_test
from .solids import (
    SOLID_KINDS,
    UNION_KINDS,
    ConstructionError,
    Solid,
    construct,
    full_group,
    proper_group,
    reflect,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3
PRECISION_ENV = "CHIRALPOLY_PRECISION"

# (proper group searched, diagram whose first reflection serves as the mirror)
_CHIRALITY_GROUPS = {
    "tetrahedron": (DiagramId.B3, DiagramId.A1A1A1),
    "icosahedron": (DiagramId.B3, DiagramId.A3),
    "dodecahedron": (DiagramId.B3, DiagramId.A3),
    "pyritohedron": (DiagramId.B3, DiagramId.A3),
    "snub_cube": (DiagramId.B3, DiagramId.B3),
    "pentagonal_icositetrahedron": (DiagramId.B3, DiagramId.B3),
    "snub_dodecahedron": (DiagramId.H3, DiagramId.H3),
    "pentagonal_hexacontahedron": (DiagramId.H3, DiagramId.H3),
}


class UsageError(Exception):
    pass


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return export.DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"{PRECISION_ENV} must be an integer, got {raw!r}") from exc
    if not 1 <= value <= 17:
        raise UsageError(f"{PRECISION_ENV} must lie in 1..17, got {value}")
    return value


def chirality_groups(solid: Solid, kind: str) -> tuple[DiagramId, DiagramId]:
    if kind in _CHIRALITY_GROUPS:
        return _CHIRALITY_GROUPS[kind]
    if kind == "quasiregular_union":
        d = UNION_KINDS[solid.spec.parameters["union"].replace("-", "_")]
    else:
        d = DiagramId(solid.spec.parameters["diagram"])
    return d, d


def _build(args) -> tuple[Solid, str]:
    kind = args.solid.replace("-", "_")
    try:
        solid = construct(
            kind,
            handedness=args.handedness,
            a=args.param,
            union=args.union,
            diagram=args.diagram,
            node=args.node,
        )
    except ConstructionError:
        raise
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc
    return solid, kind


def _check_combination(args) -> None:
    kind = args.solid.replace("-", "_")
    if args.param is not None and kind != "pyritohedron":
        raise UsageError("--param is accepted only with pyritohedron")
    if args.handedness is not None and kind not in (
        "snub_cube",
        "snub_dodecahedron",
        "pentagonal_icositetrahedron",
        "pentagonal_hexacontahedron",
    ):
        raise UsageError("--handedness is accepted only with snub solids and their duals")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _report(solid: Solid, kind: str) -> tuple[object, dict]:
    poly = build_faces(solid.array(), solid.spec, solid.group)
    report = analyze(poly, solid.group)
    searched, mirror_diagram = chirality_groups(solid, kind)
    chir = chirality_test(poly.vertices, proper_group(searched), reflect(mirror_diagram, 1))
    report["chiral"] = chir.is_chiral
    report["chirality_group"] = f"proper W({searched.value}), order {GROUP_ORDER[searched] // 2}"
    report["chirality_residual"] = chir.max_match_residual
    report["witness"] = export.element_json(chir.witness) if chir.witness is not None else None
    report["orbit_sizes"] = list(solid.orbit_sizes)
    return poly, report


def cmd_generate(args) -> int:
    _check_combination(args)
    solid, kind = _build(args)
    if args.format == "json":
        poly, report = _report(solid, kind)
    else:
        poly, report = build_faces(solid.array(), solid.spec, solid.group), None
    mesh = export.canonicalize(poly, args.precision)
    if args.format == "off":
        text = export.to_off(mesh)
    elif args.format == "obj":
        text = export.to_obj(mesh)
    else:
        text = export.to_json(
            mesh, kind, solid.spec.handedness, solid.spec.constants, report, args.precision
        )
    _emit(text, args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    _check_combination(args)
    solid, kind = _build(args)
    _, report = _report(solid, kind)
    doc = {
        "solid": kind,
        "handedness": solid.spec.handedness,
        "parameters": solid.spec.parameters,
        "constants": solid.spec.constants,
    }
    doc.update(report)
    text = json.dumps(export.jsonable(doc, args.precision), indent=2) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_group(args) -> int:
    diagram = DiagramId(args.diagram)
    group = full_group(diagram)
    checks = verify_relations(group, generators(build_system(diagram)), diagram)
    doc = {
        "diagram": diagram.value,
        "order": group.order,
        "proper_order": proper_group(diagram).order,
        "relations": [
            {"relation": c.name, "expected": c.expected, "computed": c.computed, "pass": c.passed}
            for c in checks
        ],
        "elements": [export.element_json(g) for g in group.elements],
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK if all(c.passed for c in checks) else 1


def cmd_verify(args) -> int:
    from .verify import format_ledger, run_checks

    checks = run_checks()
    _emit(format_ledger(checks), args.out)
    return 0 if all(c.ok for c in checks) else 1


def _solid_name(value: str) -> str:
    if value.replace("-", "_") not in SOLID_KINDS:
        raise argparse.ArgumentTypeError(
            f"unknown solid {value!r}; choose from {', '.join(k.replace('_', '-') for k in SOLID_KINDS)}"
        )
    return value


def _precision(value: str) -> int:
    n = int(value)
    if not 1 <= n <= 17:
        raise argparse.ArgumentTypeError("precision must lie in 1..17")
    return n


def build_parser(default_precision: int = export.DEFAULT_PRECISION) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chiralpoly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def solid_options(p):
        p.add_argument("solid", type=_solid_name, help="solid kind, e.g. snub-cube")
        p.add_argument("--handedness", choices=("left", "right"))
        p.add_argument("--param", type=float, help="pyritohedron parameter a")
        p.add_argument("--union", default="icosa_union", choices=sorted(UNION_KINDS))
        p.add_argument("--diagram", default="H3", choices=[d.value for d in DiagramId])
        p.add_argument("--node", type=int, default=1, choices=(1, 2, 3))
        p.add_argument("--precision", type=_precision, default=default_precision)
        p.add_argument("--out", help="output path (stdout when omitted)")

    gen = sub.add_parser("generate", help="write a mesh file")
    solid_options(gen)
    gen.add_argument("--format", choices=("off", "obj", "json"), default="off")
    gen.set_defaults(func=cmd_generate)

    ana = sub.add_parser("analyze", help="combinatorial and chirality report as JSON")
    solid_options(ana)
    ana.set_defaults(func=cmd_analyze)

    grp = sub.add_parser("group", help="list the elements of a Coxeter group")
    grp.add_argument("diagram", choices=[d.value for d in DiagramId])
    grp.add_argument("--out")
    grp.set_defaults(func=cmd_group)

    ver = sub.add_parser("verify", help="check every reproduced identity")
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser(_default_precision())
    except UsageError as exc:
        print(f"chiralpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"chiralpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConstructionError, DegenerateInputError) as exc:
        print(f"chiralpoly: construction failed: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION


if __name__ == "__main__":
    sys.exit(main())
