"""Rank-3 Coxeter systems with quaternionic simple roots, and their groups.

Groups are generated by breadth-first closure over exact scalars, so element
sets are compared componentwise with no tolerances.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .field import HALF, INV_SQRT2, ONE, SIGMA, SQRT2, TAU, ZERO, ExactScalar
from .quaternion import (
    GroupElement,
    Quaternion,
    apply,
    compose,
    element_order,
    inverse,
    reflection_from_root,
    scalar_product,
)

Matrix = tuple[tuple[ExactScalar, ...], ...]


class DiagramId(str, enum.Enum):
    A1A1A1 = "A1A1A1"
    A3 = "A3"
    B3 = "B3"
    H3 = "H3"


GROUP_ORDER = {DiagramId.A1A1A1: 8, DiagramId.A3: 24, DiagramId.B3: 48, DiagramId.H3: 120}

# orders of a = r1 r2, b = r2 r3 and ab
RELATIONS = {
    DiagramId.A1A1A1: (2, 2, 2),
    DiagramId.A3: (3, 3, 2),
    DiagramId.B3: (3, 4, 2),
    DiagramId.H3: (5, 3, 2),
}


class ClosureError(RuntimeError):
    """Group closure grew past its safety bound."""


def _q(x=ZERO, y=ZERO, z=ZERO) -> Quaternion:
    return Quaternion(ZERO, ExactScalar.coerce(x), ExactScalar.coerce(y), ExactScalar.coerce(z))


def _roots(diagram: DiagramId) -> tuple[Quaternion, Quaternion, Quaternion]:
    if diagram is DiagramId.A1A1A1:
        return _q(SQRT2), _q(0, SQRT2), _q(0, 0, SQRT2)
    if diagram is DiagramId.A3:
        return _q(1, 1), _q(0, -1, 1), _q(-1, 1)
    if diagram is DiagramId.B3:
        return _q(1, -1), _q(0, 1, -1), _q(0, 0, SQRT2)
    if diagram is DiagramId.H3:
        # sqrt2 * (1/2)(tau e1 + e2 + sigma e3); the other two roots carry the
        # minus sign that makes C_12 = -tau and C_23 = -1
        a2 = _q(TAU, ONE, SIGMA).scale(INV_SQRT2)
        return _q(-SQRT2), a2, _q(0, -SQRT2)
    raise ValueError(f"unknown diagram {diagram!r}")


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, k = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(m)), ZERO) for j in range(k)) for i in range(n)
    )


def identity_matrix(n: int = 3) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mat_inverse(a: Matrix) -> Matrix:
    """Exact Gauss-Jordan inverse."""
    n = len(a)
    rows = [list(r) + list(e) for r, e in zip(a, identity_matrix(n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not rows[r][col].is_zero()), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(r[n:]) for r in rows)


@dataclass(frozen=True)
class CoxeterSystem:
    id: DiagramId
    roots: tuple[Quaternion, Quaternion, Quaternion]
    cartan: Matrix
    cartan_inv: Matrix
    weights: tuple[Quaternion, Quaternion, Quaternion]

    def weight_vector(self, a1, a2, a3) -> Quaternion:
        """a1 w1 + a2 w2 + a3 w3, with float or exact coefficients."""
        coeffs = (a1, a2, a3)
        if any(isinstance(c, float) for c in coeffs):
            ws = [w.to_float() for w in self.weights]
            coeffs = tuple(float(c) for c in coeffs)
        else:
            ws = list(self.weights)
        out = ws[0].scale(coeffs[0])
        for c, w in zip(coeffs[1:], ws[1:]):
            out = out + w.scale(c)
        return out


def build_system(diagram: DiagramId | str) -> CoxeterSystem:
    diagram = DiagramId(diagram)
    roots = _roots(diagram)
    cartan = tuple(tuple(scalar_product(a, b) for b in roots) for a in roots)
    cartan_inv = mat_inverse(cartan)
    weights = []
    for i in range(3):
        w = Quaternion(ZERO, ZERO, ZERO, ZERO)
        for j in range(3):
            w = w + roots[j].scale(cartan_inv[i][j])
        weights.append(w)
    return CoxeterSystem(diagram, roots, cartan, cartan_inv, tuple(weights))


# Cartan inverses as printed, prefactors folded in
PRINTED_CARTAN_INV: dict[DiagramId, Matrix] = {
    DiagramId.A1A1A1: tuple(tuple(HALF if i == j else ZERO for j in range(3)) for i in range(3)),
    DiagramId.A3: tuple(
        tuple(ExactScalar(Fraction(v, 4)) for v in row) for row in ((3, 2, 1), (2, 4, 2), (1, 2, 3))
    ),
    DiagramId.B3: (
        (ONE, ONE, INV_SQRT2),
        (ONE, ExactScalar(2), SQRT2),
        (INV_SQRT2, SQRT2, ExactScalar(Fraction(3, 2))),
    ),
    DiagramId.H3: tuple(
        tuple(x * HALF for x in row)
        for row in (
            (3 * TAU**2, 2 * TAU**3, TAU**3),
            (2 * TAU**3, 4 * TAU**2, 2 * TAU**2),
            (TAU**3, 2 * TAU**2, TAU + 2),
        )
    ),
}


def generators(system: CoxeterSystem) -> tuple[GroupElement, GroupElement, GroupElement]:
    return tuple(reflection_from_root(a) for a in system.roots)


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group of orthogonal maps, held as a canonical action set."""

    elements: tuple[GroupElement, ...]
    tag: str = "full"
    diagram: DiagramId | None = None
    _members: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    @classmethod
    def from_elements(cls, elements: Iterable[GroupElement], tag: str, diagram=None) -> FiniteGroup:
        return cls(tuple(sorted(set(elements), key=GroupElement.sort_key)), tag, diagram)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self._members

    def as_set(self) -> frozenset:
        return self._members

    def is_closed(self) -> bool:
        return all(compose(g, h) in self._members for g in self.elements for h in self.elements)

    def has_inverses(self) -> bool:
        return all(inverse(g) in self._members for g in self.elements)

    def proper(self) -> FiniteGroup:
        return proper_subgroup(self)

    @cached_property
    def matrices(self) -> np.ndarray:
        """Float 3x3 matrices of the elements, in element order."""
        return np.array([g.matrix() for g in self.elements])


def generate_group(
    gens: Sequence[GroupElement],
    max_order: int | None = None,
    tag: str = "full",
    diagram: DiagramId | None = None,
) -> FiniteGroup:
    """Close ``gens`` under composition by breadth-first search."""
    bound = max_order if max_order is not None else 10_000
    identity = GroupElement.identity()
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(s, g)
            if h not in seen:
                seen.add(h)
                if len(seen) > bound:
                    raise ClosureError(f"closure exceeded {bound} elements; check the generators")
                queue.append(h)
    return FiniteGroup.from_elements(seen, tag, diagram)


def coxeter_group(diagram: DiagramId | str) -> FiniteGroup:
    diagram = DiagramId(diagram)
    system = build_system(diagram)
    return generate_group(generators(system), 10 * GROUP_ORDER[diagram], "full", diagram)


def proper_subgroup(g: FiniteGroup) -> FiniteGroup:
    return FiniteGroup.from_elements((h for h in g if not h.star), "proper", g.diagram)


def binary_tetrahedral() -> list[Quaternion]:
    """The 24 units +-1, +-e_i, (1/2)(+-1 +-e1 +-e2 +-e3)."""
    out = []
    for i in range(4):
        for s in (1, -1):
            c = [ZERO] * 4
            c[i] = ExactScalar(s)
            out.append(Quaternion(*c))
    for signs in itertools.product((1, -1), repeat=4):
        out.append(Quaternion(*(HALF * s for s in signs)))
    return out


def binary_tetrahedral_coset() -> list[Quaternion]:
    """The 24 units (+-1 +-e_i)/sqrt2 and (+-e_i +-e_j)/sqrt2."""
    out = []
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            c = [ZERO] * 4
            c[i] = INV_SQRT2 * si
            c[j] = INV_SQRT2 * sj
            out.append(Quaternion(*c))
    return out


def tetrahedral_closed_form() -> FiniteGroup:
    """{[p, conj p] : p in T} + {[t, conj t]* : t in T'}, built without closure."""
    elems = [GroupElement.make(p, p.conj()) for p in binary_tetrahedral()]
    elems += [GroupElement.make(t, t.conj(), True) for t in binary_tetrahedral_coset()]
    return FiniteGroup.from_elements(elems, "full", DiagramId.A3)


def pyritohedral_group() -> FiniteGroup:
    """T_h: {[p, conj p]} + {[p, conj p]*} for p in the binary tetrahedral group."""
    elems = []
    for p in binary_tetrahedral():
        elems.append(GroupElement.make(p, p.conj()))
        elems.append(GroupElement.make(p, p.conj(), True))
    return FiniteGroup.from_elements(elems, "pyritohedral")


@dataclass(frozen=True)
class RelationCheck:
    name: str
    expected: int
    computed: int

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


def verify_relations(
    g: FiniteGroup, gens: Sequence[GroupElement], diagram: DiagramId | str
) -> list[RelationCheck]:
    """Check the orders of a = r1 r2, b = r2 r3 and ab, and that they lie in g."""
    diagram = DiagramId(diagram)
    r1, r2, r3 = gens
    a = compose(r1, r2)
    b = compose(r2, r3)
    ab = compose(a, b)
    ea, eb, eab = RELATIONS[diagram]
    checks = [
        RelationCheck("a = r1r2", ea, element_order(a)),
        RelationCheck("b = r2r3", eb, element_order(b)),
        RelationCheck("ab", eab, element_order(ab)),
    ]
    members = int(all(x in g for x in (a, b, ab)))
    checks.append(RelationCheck("a, b, ab in group", 1, members))
    return checks


def fixes(g: GroupElement, v: Quaternion) -> bool:
    return apply(g, v) == v
