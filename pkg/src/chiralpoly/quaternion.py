"""Quaternions over an arbitrary scalar ring and the [p, q] / [p, q]* action.

A vector of R^3 is a pure quaternion q1 e1 + q2 e2 + q3 e3.  Orthogonal maps
of R^3 are written [p, q] (v -> p v q) and [p, q]* (v -> p conj(v) q).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable

import numpy as np

from .field import INV_SQRT2, ExactScalar, embed


@dataclass(frozen=True)
class Quaternion:
    q0: Any
    q1: Any
    q2: Any
    q3: Any

    @classmethod
    def pure(cls, x: Any, y: Any, z: Any) -> Quaternion:
        return cls(x * 0, x, y, z)

    @property
    def components(self) -> tuple:
        return (self.q0, self.q1, self.q2, self.q3)

    @property
    def vector(self) -> tuple:
        return (self.q1, self.q2, self.q3)

    def is_pure(self) -> bool:
        return self.q0 == 0

    def conj(self) -> Quaternion:
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(*(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(*(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def scale(self, s: Any) -> Quaternion:
        return Quaternion(*(s * c for c in self.components))

    def __mul__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return self.scale(other)
        a0, a1, a2, a3 = self.components
        b0, b1, b2, b3 = other.components
        return Quaternion(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def __rmul__(self, s: Any) -> Quaternion:
        return self.scale(s)

    def norm2(self) -> Any:
        return self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3

    def map(self, f: Callable[[Any], Any]) -> Quaternion:
        return Quaternion(*(f(c) for c in self.components))

    def to_float(self) -> Quaternion:
        return self.map(embed)

    def to_array(self) -> np.ndarray:
        """The vector part as a float array of shape (3,)."""
        return np.array([embed(c) for c in self.vector], dtype=float)

    def __str__(self) -> str:
        return "({}; {}, {}, {})".format(*self.components)


def multiply(a: Quaternion, b: Quaternion) -> Quaternion:
    return a * b


def scalar_product(p: Quaternion, q: Quaternion) -> Any:
    """(p, q) = 1/2 (conj(p) q + conj(q) p), i.e. the Euclidean dot product in R^4."""
    return p.q0 * q.q0 + p.q1 * q.q1 + p.q2 * q.q2 + p.q3 * q.q3


def _sign(x: Any) -> int:
    if isinstance(x, ExactScalar):
        return x.sign()
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class GroupElement:
    """The orthogonal map [p, q] (star=False) or [p, q]* (star=True).

    Construct through :meth:`make` to get the canonical sign, which makes
    elements comparable componentwise.
    """

    p: Quaternion
    q: Quaternion
    star: bool = False

    @classmethod
    def make(cls, p: Quaternion, q: Quaternion, star: bool = False) -> GroupElement:
        # [p, q] and [-p, -q] act identically
        for c in p.components:
            s = _sign(c)
            if s:
                if s < 0:
                    p, q = -p, -q
                break
        return cls(p, q, star)

    @classmethod
    def identity(cls, one: Any = None) -> GroupElement:
        one = ExactScalar(1) if one is None else one
        zero = one * 0
        e = Quaternion(one, zero, zero, zero)
        return cls(e, e, False)

    def __call__(self, v: Quaternion) -> Quaternion:
        return apply(self, v)

    def __matmul__(self, other: GroupElement) -> GroupElement:
        return compose(self, other)

    def to_float(self) -> GroupElement:
        return GroupElement(self.p.to_float(), self.q.to_float(), self.star)

    def matrix(self) -> np.ndarray:
        """The 3x3 float matrix of the action on pure quaternions."""
        g = self.to_float()
        cols = []
        for k in range(3):
            basis = [0.0, 0.0, 0.0]
            basis[k] = 1.0
            cols.append(apply(g, Quaternion.pure(*basis)).vector)
        return np.array(cols, dtype=float).T

    def is_identity(self) -> bool:
        return self == GroupElement.identity(self.p.q0 * 0 + 1)

    def sort_key(self) -> tuple:
        return (self.star, self.p.components, self.q.components)

    def __str__(self) -> str:
        return "[{}, {}]{}".format(self.p, self.q, "*" if self.star else "")


def apply(g: GroupElement, v: Quaternion) -> Quaternion:
    if g.star:
        return g.p * v.conj() * g.q
    return g.p * v * g.q


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """The element acting as g(h(v))."""
    if g.star:
        # p_g conj(p_h v' q_h) q_g = (p_g conj(q_h)) conj(v') (conj(p_h) q_g)
        p = g.p * h.q.conj()
        q = h.p.conj() * g.q
    else:
        p = g.p * h.p
        q = h.q * g.q
    return GroupElement.make(p, q, g.star != h.star)


def inverse(g: GroupElement) -> GroupElement:
    if g.star:
        # v = p conj(w) q  =>  w = conj(conj(p) v conj(q)) = q conj(v) p
        return GroupElement.make(g.q, g.p, True)
    return GroupElement.make(g.p.conj(), g.q.conj(), False)


def reflection_from_root(alpha: Quaternion) -> GroupElement:
    """Reflection in the plane orthogonal to a root of squared length 2."""
    if not alpha.is_pure():
        raise ValueError(f"root must be a pure quaternion, got {alpha}")
    n2 = alpha.norm2()
    if n2 != 2 and not (isinstance(n2, float) and abs(n2 - 2.0) < 1e-12):
        raise ValueError(f"root must satisfy (alpha, alpha) = 2, got {n2}")
    s = INV_SQRT2 if isinstance(alpha.q1, ExactScalar) else embed(INV_SQRT2)
    a = alpha.scale(s)
    return GroupElement.make(a, -a, True)


def element_order(g: GroupElement, limit: int = 1000) -> int:
    h = g
    for n in range(1, limit + 1):
        if h.is_identity():
            return n
        h = compose(g, h)
    raise ValueError(f"element order exceeds {limit}")


def unit(i: int, one: Any = None) -> Quaternion:
    """The unit 1 (i=0) or e_i (i=1,2,3)."""
    one = ExactScalar(1) if one is None else one
    comps = [one * 0] * 4
    comps[i] = one
    return Quaternion(*comps)


def pure_from(values: Iterable[Any]) -> Quaternion:
    x, y, z = values
    return Quaternion.pure(x, y, z)


E0, E1, E2, E3 = (unit(i) for i in range(4))
