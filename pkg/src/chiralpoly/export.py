"""Deterministic OFF, OBJ and JSON emitters.

Vertices are rounded to the requested number of decimals *before* sorting,
so ties are resolved on the printed values and output is byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal
from typing import Any

import numpy as np

from .field import ExactScalar
from .mesh import Polyhedron
from .quaternion import GroupElement, Quaternion
from .solids import Orbit

DEFAULT_PRECISION = 12


def fmt(value: float, precision: int) -> str:
    s = f"{float(value):.{precision}f}"
    if s.lstrip("-").strip("0.") == "":
        s = s.lstrip("-")
    return s


@dataclass(frozen=True)
class CanonicalMesh:
    vertices: tuple[tuple[str, str, str], ...]
    faces: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        edges = set()
        for f in self.faces:
            for i, j in zip(f, f[1:] + f[:1]):
                edges.add((min(i, j), max(i, j)))
        return len(edges)


def canonicalize(poly: Polyhedron, precision: int = DEFAULT_PRECISION) -> CanonicalMesh:
    rounded = [tuple(fmt(c, precision) for c in v) for v in poly.vertices]
    order = sorted(range(len(rounded)), key=lambda k: tuple(Decimal(c) for c in rounded[k]))
    new_index = {old: new for new, old in enumerate(order)}
    faces = []
    for f in poly.faces:
        g = [new_index[i] for i in f]
        k = g.index(min(g))
        faces.append(tuple(g[k:] + g[:k]))
    faces.sort(key=lambda f: (f[0], f))
    return CanonicalMesh(tuple(rounded[k] for k in order), tuple(faces))


def to_off(mesh: CanonicalMesh) -> str:
    lines = ["OFF", f"{len(mesh.vertices)} {len(mesh.faces)} {mesh.edge_count}"]
    lines += [" ".join(v) for v in mesh.vertices]
    lines += [" ".join([str(len(f))] + [str(i) for i in f]) for f in mesh.faces]
    return "\n".join(lines) + "\n"


def to_obj(mesh: CanonicalMesh) -> str:
    lines = ["v " + " ".join(v) for v in mesh.vertices]
    lines += ["f " + " ".join(str(i + 1) for i in f) for f in mesh.faces]
    return "\n".join(lines) + "\n"


def parse_off(text: str) -> CanonicalMesh:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not rows or rows[0] != ["OFF"]:
        raise ValueError("missing OFF header")
    nv, nf, _ = (int(t) for t in rows[1])
    verts = tuple(tuple(r) for r in rows[2 : 2 + nv])
    faces = []
    for r in rows[2 + nv : 2 + nv + nf]:
        n = int(r[0])
        faces.append(tuple(int(t) for t in r[1 : 1 + n]))
    return CanonicalMesh(verts, tuple(faces))


def jsonable(value: Any, precision: int) -> Any:
    """Numbers become decimal strings at ``precision`` digits."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, ExactScalar):
        return {"decimal": fmt(value.embed(), precision), "exact": str(value)}
    if isinstance(value, (float, np.floating)):
        return fmt(value, precision)
    if isinstance(value, Quaternion):
        return [jsonable(c, precision) for c in value.vector]
    if isinstance(value, GroupElement):
        return element_json(value, precision)
    if isinstance(value, Orbit):
        return [jsonable(p, precision) for p in value.points]
    if isinstance(value, np.ndarray):
        return [jsonable(v, precision) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): jsonable(v, precision) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v, precision) for v in value]
    return str(value)


def element_json(g: GroupElement, precision: int | None = None) -> dict:
    out = {
        "p": [str(c) for c in g.p.components],
        "q": [str(c) for c in g.q.components],
        "star": g.star,
    }
    if precision is not None:
        out["p_decimal"] = [fmt(float(c), precision) for c in g.p.components]
        out["q_decimal"] = [fmt(float(c), precision) for c in g.q.components]
    return out


def to_json(
    mesh: CanonicalMesh,
    solid: str,
    handedness: str,
    constants: dict,
    analysis: dict | None,
    precision: int = DEFAULT_PRECISION,
) -> str:
    doc = {
        "solid": solid,
        "handedness": handedness,
        "constants": jsonable(constants, precision),
        "vertices": [list(v) for v in mesh.vertices],
        "faces": [list(f) for f in mesh.faces],
        "analysis": jsonable(analysis, precision) if analysis is not None else None,
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
