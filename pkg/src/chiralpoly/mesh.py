"""Face structure, combinatorial reports and chirality decisions for vertex sets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .coxeter import FiniteGroup
from .quaternion import GroupElement
from .solids import Orbit, Solid, SolidSpec

PLANE_TOL = 1e-9
NORMAL_TOL = 1e-7
MATCH_TOL = 1e-8


class DegenerateInputError(ValueError):
    pass


def _as_array(points: Any) -> np.ndarray:
    if isinstance(points, (Orbit, Solid)):
        return points.array()
    if isinstance(points, np.ndarray):
        return points.astype(float).reshape(-1, 3)
    return np.array([p.to_array() if hasattr(p, "to_array") else p for p in points], dtype=float).reshape(-1, 3)


@dataclass
class Polyhedron:
    vertices: np.ndarray
    faces: list[tuple[int, ...]]
    spec: SolidSpec | None = None
    group: FiniteGroup | None = field(default=None, repr=False)

    @property
    def edges(self) -> list[tuple[int, int]]:
        out = set()
        for f in self.faces:
            for i, j in zip(f, f[1:] + f[:1]):
                out.add((min(i, j), max(i, j)))
        return sorted(out)

    @property
    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.faces)

    def face_planes(self) -> list[tuple[np.ndarray, float]]:
        """Outward unit normal and offset of each face."""
        out = []
        for f in self.faces:
            pts = self.vertices[list(f)]
            c = pts.mean(axis=0)
            # Newell's method; robust for polygons
            n = np.zeros(3)
            for a, b in zip(pts, np.roll(pts, -1, axis=0)):
                n += np.cross(a, b)
            n /= np.linalg.norm(n)
            out.append((n, float(n @ c)))
        return out

    def face_poles(self) -> np.ndarray:
        """n / h per face: the dual vertex of each face under polar reciprocation."""
        return np.array([n / h for n, h in self.face_planes()])

    def validate(self) -> list[str]:
        problems = []
        for k, ((n, h), f) in enumerate(zip(self.face_planes(), self.faces)):
            pts = self.vertices[list(f)]
            resid = np.abs(pts @ n - h).max()
            if resid > PLANE_TOL:
                problems.append(f"face {k} not planar (residual {resid:.2e})")
            if h <= 0:
                problems.append(f"face {k} not outward")
            for a, b, c in zip(pts, np.roll(pts, -1, 0), np.roll(pts, -2, 0)):
                if np.cross(b - a, c - b) @ n <= PLANE_TOL:
                    problems.append(f"face {k} not strictly convex")
                    break
        uses = Counter()
        directed = Counter()
        for f in self.faces:
            for i, j in zip(f, f[1:] + f[:1]):
                uses[(min(i, j), max(i, j))] += 1
                directed[(i, j)] += 1
        if any(c != 2 for c in uses.values()):
            problems.append("edge not shared by exactly two faces")
        if any(c != 1 for c in directed.values()):
            problems.append("inconsistent face orientation")
        v, e, f = self.counts
        if v - e + f != 2:
            problems.append(f"Euler characteristic {v - e + f} != 2")
        return problems


def build_faces(vertices: Any, spec: SolidSpec | None = None, group: FiniteGroup | None = None) -> Polyhedron:
    """Convex hull with coplanar triangles merged into polygonal faces."""
    pts = _as_array(vertices)
    if len(pts) < 4:
        raise DegenerateInputError(f"need at least 4 points, got {len(pts)}")
    try:
        hull = ConvexHull(pts)
    except QhullError as exc:
        raise DegenerateInputError(f"degenerate point cloud: {exc}") from exc
    scale = np.abs(pts).max()
    clusters: list[tuple[np.ndarray, float, set[int]]] = []
    for simplex, eq in zip(hull.simplices, hull.equations):
        n, d = eq[:3], -eq[3]
        for cn, cd, members in clusters:
            if np.linalg.norm(cn - n) < NORMAL_TOL and abs(cd - d) < PLANE_TOL * max(scale, 1.0):
                members.update(int(i) for i in simplex)
                break
        else:
            clusters.append((n, d, set(int(i) for i in simplex)))
    faces = []
    for n, d, members in clusters:
        # pick up points qhull left out of the triangulation but lying on the plane
        on_plane = np.where(np.abs(pts @ n - d) < PLANE_TOL * max(scale, 1.0))[0]
        members.update(int(i) for i in on_plane)
        faces.append(_order_face(pts, sorted(members), n))
    return Polyhedron(pts, faces, spec, group)


def _order_face(pts: np.ndarray, idx: list[int], normal: np.ndarray) -> tuple[int, ...]:
    """Counter-clockwise order seen from outside."""
    sub = pts[idx]
    c = sub.mean(axis=0)
    u = sub[0] - c
    u /= np.linalg.norm(u)
    w = np.cross(normal, u)
    angles = np.arctan2((sub - c) @ w, (sub - c) @ u)
    return tuple(idx[k] for k in np.argsort(angles))


def _clusters(values: Iterable[float], tol: float) -> list[tuple[float, int]]:
    out: list[list[float]] = []
    for v in sorted(values):
        if out and v - out[-1][0] <= tol:
            out[-1].append(v)
        else:
            out.append([v])
    return [(float(np.mean(c)), len(c)) for c in out]


def set_equal(a: Any, b: Any, tol: float = MATCH_TOL) -> bool:
    return match_residual(a, b, tol) is not None


def match_residual(a: Any, b: Any, tol: float = MATCH_TOL) -> float | None:
    """Largest matched distance under a greedy nearest bijection, or None."""
    pa, pb = _as_array(a), _as_array(b)
    if pa.shape != pb.shape:
        return None
    used = np.zeros(len(pb), dtype=bool)
    worst = 0.0
    for p in pa:
        d = np.linalg.norm(pb - p, axis=1)
        d[used] = np.inf
        k = int(np.argmin(d))
        if d[k] > tol:
            return None
        used[k] = True
        worst = max(worst, float(d[k]))
    return worst


def _nn_mismatch(a: np.ndarray, b: np.ndarray) -> float:
    d = np.linalg.norm(a[:, None, :] - b[None, :, :], axis=2)
    return float(d.min(axis=1).max())


@dataclass
class ChiralityReport:
    is_chiral: bool
    witness: GroupElement | None
    group_searched: str
    max_match_residual: float
    candidates_checked: int = 0


def chirality_test(
    left: Any, proper_group: FiniteGroup, mirror: GroupElement, tol: float = MATCH_TOL
) -> ChiralityReport:
    """Search ``proper_group`` for a rotation taking ``left`` onto its mirror image."""
    if any(g.star for g in proper_group):
        raise ValueError("chirality search must run over proper rotations only")
    if not mirror.star:
        raise ValueError("mirror must be an improper element")
    pts = _as_array(left)
    right = pts @ mirror.matrix().T
    best = np.inf
    tag = f"{proper_group.diagram.value if proper_group.diagram else ''}:{proper_group.tag}"
    for k, (g, m) in enumerate(zip(proper_group.elements, proper_group.matrices), 1):
        image = pts @ m.T
        resid = match_residual(image, right, tol)
        if resid is not None:
            return ChiralityReport(False, g, tag, resid, k)
        best = min(best, _nn_mismatch(image, right))
    # no witness: report how close the nearest candidate came
    return ChiralityReport(True, None, tag, best, len(proper_group))


def verify_witness(left: Any, g: GroupElement, mirror: GroupElement, tol: float = MATCH_TOL) -> bool:
    pts = _as_array(left)
    return set_equal(pts @ g.matrix().T, pts @ mirror.matrix().T, tol)


def is_orbit(points: np.ndarray, group: FiniteGroup, tol: float = MATCH_TOL) -> bool:
    """True when ``points`` is exactly the group orbit of its first point."""
    images = group.matrices @ points[0]
    uniq: list[np.ndarray] = []
    for p in images:
        if not any(np.linalg.norm(p - q) < tol for q in uniq):
            uniq.append(p)
    return set_equal(np.array(uniq), points, tol)


def is_regular(p: Polyhedron, tol: float = 1e-9) -> bool:
    """Single edge length, single face size, every face a regular polygon."""
    lengths = [np.linalg.norm(p.vertices[i] - p.vertices[j]) for i, j in p.edges]
    if max(lengths) - min(lengths) > tol or len({len(f) for f in p.faces}) != 1:
        return False
    for f in p.faces:
        pts = p.vertices[list(f)]
        r = np.linalg.norm(pts - pts.mean(axis=0), axis=1)
        if r.max() - r.min() > tol:
            return False
    return True


def face_shape_classes(p: Polyhedron, decimals: int = 8) -> int:
    shapes = set()
    for f in p.faces:
        pts = p.vertices[list(f)]
        sides = np.linalg.norm(pts - np.roll(pts, -1, axis=0), axis=1)
        shapes.add((len(f), tuple(np.round(np.sort(sides), decimals))))
    return len(shapes)


def analyze(p: Polyhedron, group: FiniteGroup | None = None) -> dict:
    group = group if group is not None else p.group
    v, e, f = p.counts
    lengths = [float(np.linalg.norm(p.vertices[i] - p.vertices[j])) for i, j in p.edges]
    norms = np.linalg.norm(p.vertices, axis=1)
    report = {
        "V": v,
        "E": e,
        "F": f,
        "euler": v - e + f,
        "edge_lengths": _clusters(lengths, PLANE_TOL),
        "face_inventory": dict(sorted(Counter(len(face) for face in p.faces).items())),
        "face_shape_classes": face_shape_classes(p),
        "regular": is_regular(p),
        "valid": not p.validate(),
    }
    equal_norms = bool(norms.max() - norms.min() < PLANE_TOL)
    if group is not None:
        report["vertex_transitive"] = equal_norms and is_orbit(p.vertices, group)
        report["face_transitive"] = is_orbit(p.face_poles(), group)
    else:
        report["vertex_transitive"] = None
        report["face_transitive"] = None
    return report


def faces_by_normal(points: Any, normals: Any, tol: float = PLANE_TOL) -> list[np.ndarray]:
    """For each normal n, the points maximising p.n (the face that n supports)."""
    pts = _as_array(points)
    out = []
    for n in _as_array(normals):
        n = n / np.linalg.norm(n)
        h = pts @ n
        out.append(pts[h > h.max() - tol])
    return out


def coplanarity_residual(points: np.ndarray, normal: np.ndarray) -> float:
    """Spread of p.n across ``points`` for the unit direction of ``normal``."""
    n = normal / np.linalg.norm(normal)
    h = points @ n
    return float(h.max() - h.min())


def plane_fit_residual(points: np.ndarray) -> float:
    """Largest distance from the least-squares plane through ``points``."""
    c = points.mean(axis=0)
    _, s, vt = np.linalg.svd(points - c)
    return float(np.abs((points - c) @ vt[-1]).max())


def mirror_images(points: Sequence, mirror: GroupElement) -> np.ndarray:
    return _as_array(points) @ mirror.matrix().T
