"""Orbits of weight vectors and the named solids built from them.

Classical solids (tetrahedron, icosahedron, dodecahedron, fixed pyritohedron)
are computed exactly over Q(sqrt2, sqrt5).  The snub solids need the real
root of a cubic and are computed in binary64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Sequence

import numpy as np
from scipy.spatial import ConvexHull

from .coxeter import (
    CoxeterSystem,
    DiagramId,
    FiniteGroup,
    build_system,
    generators,
    pyritohedral_group,
)
from .coxeter import coxeter_group as _coxeter_group
from .field import HALF, INV_SQRT2, SIGMA, TAU, ZERO, ExactScalar
from .quaternion import GroupElement, Quaternion, apply, compose, scalar_product

DEDUP_TOL = 1e-9


class ConstructionError(RuntimeError):
    """A construction could not be completed (bad parameter, non-convergence)."""


class DegenerateParameterError(ConstructionError, ValueError):
    pass


@lru_cache(maxsize=None)
def system(diagram: DiagramId | str) -> CoxeterSystem:
    return build_system(DiagramId(diagram))


@lru_cache(maxsize=None)
def full_group(diagram: DiagramId | str) -> FiniteGroup:
    return _coxeter_group(DiagramId(diagram))


@lru_cache(maxsize=None)
def proper_group(diagram: DiagramId | str) -> FiniteGroup:
    return full_group(diagram).proper()


@lru_cache(maxsize=None)
def pyritohedral() -> FiniteGroup:
    return pyritohedral_group()


@dataclass(frozen=True)
class DynkinVector:
    a1: Any
    a2: Any
    a3: Any

    def vector(self, sys: CoxeterSystem) -> Quaternion:
        return sys.weight_vector(self.a1, self.a2, self.a3)


@dataclass(frozen=True)
class Orbit:
    points: tuple[Quaternion, ...]
    group_tag: str = ""
    seed: Any = None

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def is_exact(self) -> bool:
        return bool(self.points) and isinstance(self.points[0].q1, ExactScalar)

    def as_set(self) -> frozenset:
        return frozenset(self.points)

    def array(self) -> np.ndarray:
        return np.array([p.to_array() for p in self.points], dtype=float).reshape(-1, 3)

    def scaled(self, s: Any) -> Orbit:
        return Orbit(tuple(p.scale(s) for p in self.points), self.group_tag, self.seed)


@dataclass
class SolidSpec:
    kind: str
    handedness: str = "achiral"
    parameters: dict = field(default_factory=dict)
    constants: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.handedness not in ("left", "right", "achiral"):
            raise ValueError(f"bad handedness {self.handedness!r}")
        chiral_kinds = {
            "snub_cube",
            "snub_dodecahedron",
            "pentagonal_icositetrahedron",
            "pentagonal_hexacontahedron",
        }
        if self.handedness != "achiral" and self.kind not in chiral_kinds:
            raise ValueError(f"{self.kind} cannot carry handedness {self.handedness!r}")


@dataclass
class Solid:
    """A vertex set assembled from one or more orbits."""

    spec: SolidSpec
    orbits: tuple[Orbit, ...]
    group: FiniteGroup | None = None

    def array(self) -> np.ndarray:
        return dedup_array(np.vstack([o.array() for o in self.orbits]))

    @property
    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)


# ---------------------------------------------------------------- orbits


def dedup_array(points: np.ndarray, tol: float = DEDUP_TOL) -> np.ndarray:
    """Drop points within ``tol`` of an earlier one, then sort lexicographically."""
    kept: list[np.ndarray] = []
    for p in np.asarray(points, dtype=float):
        if not any(np.linalg.norm(p - q) < tol for q in kept):
            kept.append(p)
    if not kept:
        return np.zeros((0, 3))
    arr = np.array(kept)
    order = np.lexsort(np.round(arr, 9).T[::-1])
    return arr[order]


def orbit_of_point(group: FiniteGroup, point: Quaternion, seed: Any = None) -> Orbit:
    """{g(point) : g in group}, deduplicated and sorted."""
    if isinstance(point.q1, ExactScalar):
        pts = {apply(g, point) for g in group}
        ordered = sorted(pts, key=lambda q: q.vector)
        return Orbit(tuple(ordered), group.tag, seed)
    v = np.array([float(c) for c in point.vector])
    images = group.matrices @ v
    arr = dedup_array(images)
    return Orbit(tuple(Quaternion.pure(*map(float, p)) for p in arr), group.tag, seed)


def orbit(group: FiniteGroup, seed: DynkinVector, sys: CoxeterSystem) -> Orbit:
    return orbit_of_point(group, seed.vector(sys), seed)


def fundamental_orbit(diagram: DiagramId | str, node: int, proper: bool = False) -> Orbit:
    """O(100), O(010) or O(001) for node 1, 2, 3."""
    coeffs = [0, 0, 0]
    coeffs[node - 1] = 1
    group = proper_group(diagram) if proper else full_group(diagram)
    return orbit(group, DynkinVector(*coeffs), system(diagram))


def face_center(points: Sequence[Quaternion]) -> Quaternion:
    if not points:
        raise ValueError("face_center of an empty point list")
    total = points[0]
    for p in points[1:]:
        total = total + p
    n = len(points)
    if isinstance(total.q1, ExactScalar):
        return total.scale(ExactScalar(1) / n)
    return total.scale(1.0 / n)


def reflect(diagram: DiagramId | str, i: int) -> GroupElement:
    return generators(system(diagram))[i - 1]


def _word(diagram: DiagramId | str, *indices: int) -> GroupElement:
    """r_{i1} r_{i2} ... as a single element (rightmost acts first)."""
    g = reflect(diagram, indices[-1])
    for i in reversed(indices[:-1]):
        g = compose(reflect(diagram, i), g)
    return g


# ---------------------------------------------------------------- tetrahedron


def tetrahedron_pair() -> tuple[Orbit, Orbit]:
    a = INV_SQRT2
    seed = DynkinVector(a, a, a)
    sys = system(DiagramId.A1A1A1)
    group = proper_group(DiagramId.A1A1A1)
    lam1 = seed.vector(sys)
    lam2 = apply(reflect(DiagramId.A1A1A1, 1), lam1)
    return orbit(group, seed, sys), orbit_of_point(group, lam2, "r1 * seed")


# ---------------------------------------------------------------- icosahedron


def icosahedron_cubic_roots() -> tuple[ExactScalar, ExactScalar, ExactScalar]:
    """Roots of x^3 - x^2 - x = 0: 0, tau, sigma."""
    roots = (ZERO, TAU, SIGMA)
    for r in roots:
        assert r**3 - r**2 - r == 0
    return roots


def icosahedron_seeds() -> tuple[Quaternion, Quaternion]:
    """Lambda_I at x = tau with a2 = -sigma/2, and its mirror r1 Lambda_I."""
    sys = system(DiagramId.A3)
    _, tau, _ = icosahedron_cubic_roots()
    a2 = -SIGMA * HALF
    lam1 = DynkinVector(a2 * tau, a2, a2 * tau).vector(sys)
    lam2 = apply(reflect(DiagramId.A3, 1), lam1)
    return lam1, lam2


def icosahedron_sigma_seed() -> Quaternion:
    """The x = sigma solution scaled by a2 = tau^2/2: (1/2)(-tau e2 + e3)."""
    a2 = TAU * TAU * HALF
    return DynkinVector(a2 * SIGMA, a2, a2 * SIGMA).vector(system(DiagramId.A3))


def icosahedron_pair() -> tuple[Orbit, Orbit]:
    group = proper_group(DiagramId.A3)
    lam1, lam2 = icosahedron_seeds()
    return orbit_of_point(group, lam1, "x=tau"), orbit_of_point(group, lam2, "r1 * seed")


def icosahedron_face_centers() -> tuple[Quaternion, Quaternion, Quaternion]:
    """b2, b4, b5: centroids of the faces around Lambda_I not centred on w1, w3."""
    lam, _ = icosahedron_seeds()
    d = DiagramId.A3

    def centroid(*words):
        return face_center([lam] + [apply(_word(d, *w), lam) for w in words])

    return centroid((2, 1), (2, 3)), centroid((1, 2), (1, 3)), centroid((3, 1), (3, 2))


def coplanarity_scale(target: Quaternion, vec: Quaternion, normal: Quaternion) -> Any:
    """s with (s*vec - target) . normal = 0."""
    return scalar_product(target, normal) / scalar_product(vec, normal)


def dodecahedron_from_dual() -> Solid:
    sys = system(DiagramId.A3)
    group = proper_group(DiagramId.A3)
    lam, _ = icosahedron_seeds()
    b2, _, _ = icosahedron_face_centers()
    w1, _, w3 = sys.weights
    scale = coplanarity_scale(w1, b2, lam)
    orbits = (
        orbit_of_point(group, b2.scale(scale), "lambda * b2"),
        orbit_of_point(group, w1, DynkinVector(1, 0, 0)),
        orbit_of_point(group, w3, DynkinVector(0, 0, 1)),
    )
    spec = SolidSpec("dodecahedron", constants={"lambda": scale, "b2": b2})
    return Solid(spec, orbits, group)


# ---------------------------------------------------------------- pyritohedron


def _cross(a: Quaternion, b: Quaternion) -> Quaternion:
    a1, a2, a3 = a.vector
    b1, b2, b3 = b.vector
    return Quaternion.pure(a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)


def pyritohedron_vectors() -> dict[str, Quaternion]:
    """The face-centre vectors d2, d4, d5 and the normal of the plane they span."""
    big = TAU - 2 * SIGMA
    d2 = Quaternion.pure(ZERO, big, -SIGMA)
    d4 = Quaternion.pure(SIGMA, ZERO, big)
    d5 = Quaternion.pure(-SIGMA, ZERO, big)
    normal = _cross(d4 - d2, d5 - d2)
    # scale so the e2 component is 5, to compare with the printed normal
    normal = normal.scale(ExactScalar(5) / normal.q2)
    return {"d2": d2, "d4": d4, "d5": d5, "D": normal}


def pyritohedron_fixed() -> Solid:
    vecs = pyritohedron_vectors()
    w1, _, w3 = system(DiagramId.A3).weights
    rho = coplanarity_scale(w1, vecs["d2"], vecs["D"])
    group = proper_group(DiagramId.A3)
    orbits = (
        orbit_of_point(group, vecs["d2"].scale(rho), "rho * d2"),
        orbit_of_point(group, w1, DynkinVector(1, 0, 0)),
        orbit_of_point(group, w3, DynkinVector(0, 0, 1)),
    )
    edge = orbit_of_point(pyritohedral(), vecs["d4"] - vecs["d5"], "d4 - d5")
    spec = SolidSpec(
        "pyritohedron",
        parameters={"variant": "fixed"},
        constants={"rho": rho, "D": vecs["D"], "edge_orbit": edge},
    )
    return Solid(spec, orbits, pyritohedral())


def pyritohedron_family(a: float) -> Solid:
    """{+-a e_i +- b e_j, cyclic} + (+-e1 +-e2 +-e3) with b = a^2 - 2a."""
    a = float(a)
    if not math.isfinite(a):
        raise DegenerateParameterError(f"pyritohedron parameter must be finite, got {a}")
    b = a * a - 2 * a
    group = pyritohedral()
    twelve = orbit_of_point(group, Quaternion.pure(a, b, 0.0), DynkinVector(a, b, 0.0))
    cube = orbit_of_point(group, Quaternion.pure(1.0, 1.0, 1.0), "cube")
    solid = Solid(
        SolidSpec("pyritohedron", parameters={"variant": "family", "a": a}, constants={"b": b}),
        (twelve, cube),
        group,
    )
    pts = solid.array()
    try:
        hull = ConvexHull(pts)
    except Exception as exc:  # qhull raises its own error type
        raise DegenerateParameterError(f"pyritohedron a={a}: hull failed ({exc})") from exc
    planes = np.unique(np.round(hull.equations, 7), axis=0)
    if len(hull.vertices) != len(pts) or len(planes) != 12:
        raise DegenerateParameterError(
            f"pyritohedron a={a} degenerates: {len(hull.vertices)}/{len(pts)} extreme points, "
            f"{len(planes)} face planes"
        )
    return solid


# ---------------------------------------------------------------- snub solids


def solve_cubic(c2: float, c1: float, c0: float, lo: float = 1.0, hi: float = 2.0) -> float:
    """Root in [lo, hi] of x^3 + c2 x^2 + c1 x + c0, by bisection then Newton."""

    def f(x):
        return ((x + c2) * x + c1) * x + c0

    def df(x):
        return (3 * x + 2 * c2) * x + c1

    flo, fhi = f(lo), f(hi)
    if flo * fhi > 0:
        raise ConstructionError(f"cubic has no sign change on [{lo}, {hi}]")
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo < 1e-6:
            break
    x = 0.5 * (lo + hi)
    for _ in range(50):
        step = f(x) / df(x)
        x -= step
        if abs(step) < 1e-16 * max(1.0, abs(x)):
            break
    else:
        raise ConstructionError("Newton polish did not converge")
    if abs(f(x)) > 1e-13:
        raise ConstructionError(f"cubic residual {f(x):.3e} too large")
    return x


@lru_cache(maxsize=None)
def snub_cube_constants() -> dict[str, float]:
    x = solve_cubic(-1.0, -1.0, -1.0)
    y = (x * x - 1) / math.sqrt(2)
    return {
        "x": x,
        "y": y,
        "lambda": x / math.sqrt(2),
        "eta": x**-2 / math.sqrt(2),
    }


@lru_cache(maxsize=None)
def snub_dodecahedron_constants() -> dict[str, float]:
    tau = float(TAU)
    sigma = float(SIGMA)
    # here x = a3/a2 and y = a1/a2
    x = solve_cubic(-1.0, -1.0, -tau)
    y = tau / (x - 1)
    lam43 = (-3 * sigma * x * x + tau * x + 2 + sigma) / (x * x + (2 + sigma) * x + 1)
    return {"x": x, "y": y, "y_alt": (x * x - 1) / tau, "lambda_closed_form": lam43}


def _normalized(v: Quaternion) -> Quaternion:
    return v.scale(1.0 / math.sqrt(v.norm2()))


def _mirror_float(diagram, pts: Orbit) -> Orbit:
    m = reflect(diagram, 1).matrix()
    arr = dedup_array(pts.array() @ m.T)
    return Orbit(tuple(Quaternion.pure(*map(float, p)) for p in arr), pts.group_tag, "r1 image")


def snub_cube_seed() -> Quaternion:
    """Lambda_I = x w1 + w2 + y w3 with the (x^2+1)/2 prefactor deleted: (x, 1, 1/x)."""
    k = snub_cube_constants()
    lam = DynkinVector(k["x"], 1.0, k["y"]).vector(system(DiagramId.B3))
    return lam.scale(2.0 / (k["x"] ** 2 + 1))


def snub_cube_pair() -> tuple[Orbit, Orbit, SolidSpec]:
    k = snub_cube_constants()
    group = proper_group(DiagramId.B3)
    lam1 = snub_cube_seed()
    lam2 = apply(reflect(DiagramId.B3, 1).to_float(), lam1)
    spec = SolidSpec("snub_cube", "left", {"a2": 2.0 / (k["x"] ** 2 + 1)}, dict(k))
    return (
        orbit_of_point(group, lam1, DynkinVector(k["x"], 1.0, k["y"])),
        orbit_of_point(group, lam2, "r1 * seed"),
        spec,
    )


def snub_cube_face_vector() -> np.ndarray:
    """c2 = (2x+1) e1 + e2 + x^2 e3."""
    x = snub_cube_constants()["x"]
    return np.array([2 * x + 1, 1.0, x * x])


def snub_cube_dual(handedness: str = "left") -> Solid:
    k = snub_cube_constants()
    sys = system(DiagramId.B3)
    group = proper_group(DiagramId.B3)
    w1, _, w3 = (w.to_float() for w in sys.weights)
    c2 = Quaternion.pure(*snub_cube_face_vector())
    orbits = (
        orbit_of_point(group, w1.scale(k["lambda"]), "lambda * w1"),
        orbit_of_point(group, w3, DynkinVector(0, 0, 1)),
        orbit_of_point(group, c2.scale(k["eta"]), "eta * c2"),
    )
    if handedness == "right":
        orbits = tuple(_mirror_float(DiagramId.B3, o) for o in orbits)
    spec = SolidSpec("pentagonal_icositetrahedron", handedness, {}, dict(k))
    return Solid(spec, orbits, group)


def snub_dodecahedron_seed() -> Quaternion:
    """Lambda_I = y w1 + w2 + x w3 with the a2/sqrt2 prefactor deleted (a2 = sqrt2)."""
    k = snub_dodecahedron_constants()
    lam = DynkinVector(k["y"], 1.0, k["x"]).vector(system(DiagramId.H3))
    return lam.scale(math.sqrt(2))


def snub_dodecahedron_pair() -> tuple[Orbit, Orbit, SolidSpec]:
    k = snub_dodecahedron_constants()
    group = proper_group(DiagramId.H3)
    lam1 = snub_dodecahedron_seed()
    lam2 = apply(reflect(DiagramId.H3, 1).to_float(), lam1)
    spec = SolidSpec(
        "snub_dodecahedron",
        "left",
        {"a2": math.sqrt(2), "convention": "x = a3/a2, y = a1/a2"},
        dict(k),
    )
    return (
        orbit_of_point(group, lam1, DynkinVector(k["y"], 1.0, k["x"])),
        orbit_of_point(group, lam2, "r1 * seed"),
        spec,
    )


def snub_dodecahedron_face_center() -> Quaternion:
    """Centroid of the triangle (Lambda, r2r1 Lambda, r2r3 Lambda)."""
    lam = snub_dodecahedron_seed()
    d = DiagramId.H3
    return face_center([lam] + [apply(_word(d, *w).to_float(), lam) for w in ((2, 1), (2, 3))])


def snub_dodecahedron_dual_constants() -> dict[str, Any]:
    """lambda and rho*c2 solved from coplanarity with normal Lambda_I."""
    lam = snub_dodecahedron_seed()
    w1, _, w3 = (w.to_float() for w in system(DiagramId.H3).weights)
    c2 = snub_dodecahedron_face_center()
    lam_solved = coplanarity_scale(w1, w3, lam)
    rho = coplanarity_scale(w1, c2, lam)
    return {"lambda": lam_solved, "rho": rho, "rho_c2": c2.scale(rho)}


def snub_dodecahedron_dual(handedness: str = "left") -> Solid:
    group = proper_group(DiagramId.H3)
    w1, _, w3 = (w.to_float() for w in system(DiagramId.H3).weights)
    k = snub_dodecahedron_dual_constants()
    orbits = (
        orbit_of_point(group, w1, DynkinVector(1, 0, 0)),
        orbit_of_point(group, w3.scale(k["lambda"]), "lambda * w3"),
        orbit_of_point(group, k["rho_c2"], "rho * c2"),
    )
    if handedness == "right":
        orbits = tuple(_mirror_float(DiagramId.H3, o) for o in orbits)
    constants = dict(snub_dodecahedron_constants())
    constants.update(k)
    spec = SolidSpec("pentagonal_hexacontahedron", handedness, {}, constants)
    return Solid(spec, orbits, group)


# ---------------------------------------------------------------- unions

UNION_KINDS = {
    "icosa_union": DiagramId.A3,
    "snub_cube_union": DiagramId.B3,
    "snub_dodeca_union": DiagramId.H3,
}


def quasiregular_union(kind: str) -> Orbit:
    """Orbit of Lambda_I under the full Coxeter group (left and right orbits together)."""
    if kind not in UNION_KINDS:
        raise ValueError(f"unknown union kind {kind!r}; expected one of {sorted(UNION_KINDS)}")
    diagram = UNION_KINDS[kind]
    if kind == "icosa_union":
        seed = icosahedron_seeds()[0]
    elif kind == "snub_cube_union":
        seed = snub_cube_seed()
    else:
        seed = snub_dodecahedron_seed()
    return orbit_of_point(full_group(diagram), seed, kind)


# ---------------------------------------------------------------- dispatch


def snub_solid(kind: str, handedness: str = "left") -> Solid:
    if kind == "snub_cube":
        left, right, spec = snub_cube_pair()
    elif kind == "snub_dodecahedron":
        left, right, spec = snub_dodecahedron_pair()
    else:
        raise ValueError(kind)
    spec.handedness = handedness
    group = proper_group(DiagramId.B3 if kind == "snub_cube" else DiagramId.H3)
    return Solid(spec, (left if handedness == "left" else right,), group)


SOLID_KINDS = (
    "tetrahedron",
    "icosahedron",
    "dodecahedron",
    "pyritohedron",
    "snub_cube",
    "snub_dodecahedron",
    "pentagonal_icositetrahedron",
    "pentagonal_hexacontahedron",
    "quasiregular_union",
    "fundamental_orbit",
)


def construct(
    kind: str,
    handedness: str | None = None,
    a: float | None = None,
    union: str = "icosa_union",
    diagram: str = "H3",
    node: int = 1,
) -> Solid:
    """Build any named solid; the single entry point used by the CLI."""
    kind = kind.replace("-", "_")
    if kind not in SOLID_KINDS:
        raise ValueError(f"unknown solid {kind!r}")
    chiral = kind in ("snub_cube", "snub_dodecahedron", "pentagonal_icositetrahedron", "pentagonal_hexacontahedron")
    if handedness is not None and not chiral:
        raise ValueError(f"--handedness only applies to snub solids and their duals, not {kind}")
    if a is not None and kind != "pyritohedron":
        raise ValueError("--param only applies to the pyritohedron")
    hand = handedness or "left"
    if kind == "tetrahedron":
        o, _ = tetrahedron_pair()
        return Solid(SolidSpec(kind), (o,), proper_group(DiagramId.A1A1A1))
    if kind == "icosahedron":
        o, _ = icosahedron_pair()
        return Solid(SolidSpec(kind), (o,), proper_group(DiagramId.A3))
    if kind == "dodecahedron":
        return dodecahedron_from_dual()
    if kind == "pyritohedron":
        return pyritohedron_fixed() if a is None else pyritohedron_family(a)
    if kind in ("snub_cube", "snub_dodecahedron"):
        return snub_solid(kind, hand)
    if kind == "pentagonal_icositetrahedron":
        return snub_cube_dual(hand)
    if kind == "pentagonal_hexacontahedron":
        return snub_dodecahedron_dual(hand)
    if kind == "quasiregular_union":
        o = quasiregular_union(union.replace("-", "_"))
        return Solid(SolidSpec(kind, parameters={"union": union}), (o,), full_group(UNION_KINDS[union.replace("-", "_")]))
    o = fundamental_orbit(diagram, node)
    return Solid(SolidSpec(kind, parameters={"diagram": str(DiagramId(diagram).value), "node": node}), (o,), full_group(diagram))
