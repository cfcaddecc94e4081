"""Printed coordinate sets and closed forms, kept apart from the constructions.

Everything here is written down directly from the published formulas, never
computed through the group machinery, so it can serve as the comparison side
of every reproduction check.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .field import HALF, INV_SQRT2, SIGMA, TAU, ZERO, ExactScalar
from .quaternion import GroupElement, Quaternion

_EVEN_SIGNS = ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))


def _pure(x, y, z) -> Quaternion:
    return Quaternion.pure(ExactScalar.coerce(x), ExactScalar.coerce(y), ExactScalar.coerce(z))


def _cyclic(coeffs) -> list[tuple]:
    """(c1, c2, c3) and its two cyclic shifts."""
    c = tuple(coeffs)
    return [c, (c[2], c[0], c[1]), (c[1], c[2], c[0])]


def _all_signs(v):
    for s in itertools.product((1, -1), repeat=3):
        yield tuple(si * vi for si, vi in zip(s, v))


def tetrahedron_left() -> frozenset:
    h = HALF
    return frozenset(
        _pure(h * a, h * b, h * c) for a, b, c in ((1, 1, 1), (1, -1, -1), (-1, -1, 1), (-1, 1, -1))
    )


def tetrahedron_right() -> frozenset:
    h = HALF
    return frozenset(
        _pure(h * a, h * b, h * c) for a, b, c in ((-1, -1, -1), (-1, 1, 1), (1, -1, 1), (1, 1, -1))
    )


def _half_pairs(first, second) -> frozenset:
    """(1/2)(+-first e_i +- second e_{i+1}), i cyclic."""
    out = set()
    for sa, sb in itertools.product((1, -1), repeat=2):
        for v in _cyclic((HALF * first * sa, HALF * second * sb, ZERO)):
            out.add(_pure(*v))
    return frozenset(out)


def icosahedron_left() -> frozenset:
    return _half_pairs(ExactScalar(1), TAU)


def icosahedron_right() -> frozenset:
    return _half_pairs(TAU, ExactScalar(1))


def dodecahedron_orbits() -> tuple[frozenset, frozenset, frozenset]:
    h = HALF
    twelve = _half_pairs(TAU, SIGMA)
    w1 = frozenset(
        _pure(h * a, h * b, h * c) for a, b, c in ((1, 1, 1), (-1, -1, 1), (-1, 1, -1), (1, -1, -1))
    )
    w3 = frozenset(
        _pure(h * a, h * b, h * c) for a, b, c in ((-1, -1, -1), (-1, 1, 1), (1, -1, 1), (1, 1, -1))
    )
    return twelve, w1, w3


LAMBDA_DODECAHEDRON = 3 * SIGMA * SIGMA
B2_ICOSAHEDRON = Quaternion.pure(ZERO, TAU**3 / 6, -(TAU**2) * SIGMA / 6)
LAMBDA_B2 = Quaternion.pure(ZERO, TAU * HALF, -SIGMA * HALF)

PYRITOHEDRON_RHO = (205 - 280 * SIGMA) / 1210
PYRITOHEDRON_NORMAL = Quaternion.pure(ZERO, ExactScalar(5), 7 + SIGMA)


def pyritohedron_twelve(rho: ExactScalar) -> frozenset:
    """rho {+-(tau - 2 sigma) e_i +- sigma e_{i+1}}."""
    return frozenset(p.scale(rho) for p in _half_pairs(2 * (TAU - 2 * SIGMA), 2 * SIGMA))


def pyritohedron_edge_orbit() -> frozenset:
    out = set()
    for i in range(3):
        for s in (1, -1):
            v = [ZERO, ZERO, ZERO]
            v[i] = 2 * SIGMA * s
            out.add(_pure(*v))
    return frozenset(out)


def pyritohedron_family_points(a: float) -> np.ndarray:
    b = a * a - 2 * a
    pts = set()
    for v in _cyclic((a, b, 0.0)):
        for w in _all_signs(v):
            pts.add(tuple(float(c) + 0.0 for c in w))
    for w in _all_signs((1.0, 1.0, 1.0)):
        pts.add(w)
    return np.array(sorted(pts))


def _signed_family(v, parity: int | None) -> list[tuple]:
    out = []
    for s in itertools.product((1, -1), repeat=3):
        if parity is not None and s.count(-1) % 2 != parity:
            continue
        for c in _cyclic(tuple(si * vi for si, vi in zip(s, v))):
            out.append(c)
    return out


def snub_cube_sets(x: float, literal: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """The two 24-point snub cube vertex sets.

    The printed sets attach free signs to both cyclic families.  Taken literally
    each is invariant under coordinate reflections, so ``literal=False`` applies
    the sign parity that makes them rotation orbits: an even number of minus
    signs on the (x, 1, 1/x) family and an odd number on (1, x, 1/x).
    """
    first = (x, 1.0, 1 / x)
    second = (1.0, x, 1 / x)
    if literal:
        return np.array(_signed_family(first, None)), np.array(_signed_family(second, None))
    left = _signed_family(first, 0) + _signed_family(second, 1)
    right = _signed_family(second, 0) + _signed_family(first, 1)
    return np.array(left), np.array(right)


def snub_cube_seed_printed(x: float, a2: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    lam1 = a2 * (x * x + 1) / 2 * np.array([x, 1.0, 1 / x])
    lam2 = a2 * (x * x + 1) / math.sqrt(2) * np.array([1.0, x, 1 / x])
    return lam1, lam2


def pentagonal_icositetrahedron_sets(x: float, literal: bool = False) -> tuple[np.ndarray, ...]:
    lam = x / math.sqrt(2)
    eta = x**-2 / math.sqrt(2)
    octa = np.array([v for v in _signed_family((lam, 0.0, 0.0), None)])
    octa = np.unique(octa + 0.0, axis=0)
    cube = np.array(list(_all_signs((1.0, 1.0, 1.0)))) / math.sqrt(2)
    c2 = (2 * x + 1, 1.0, x * x)
    c2_swapped = (1.0, 2 * x + 1, x * x)
    if literal:
        third = _signed_family(c2, None)
    else:
        third = _signed_family(c2, 0) + _signed_family(c2_swapped, 1)
    return octa, cube, eta * np.array(third)


def snub_dodecahedron_seed_printed(x: float, a2: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    tau, sigma = float(TAU), float(SIGMA)
    lam1 = a2 / math.sqrt(2) * np.array([sigma * (x * x - 1), -x, 1 - tau * x**3])
    lam2 = a2 / math.sqrt(2) * np.array([-sigma * (x * x - 1), -x, 1 - tau * x**3])
    return lam1, lam2


def hexacontahedron_lambda(x: float) -> float:
    tau, sigma = float(TAU), float(SIGMA)
    return (-3 * sigma * x * x + tau * x + 2 + sigma) / (x * x + (2 + sigma) * x + 1)


def hexacontahedron_rho_c2(x: float, e2_coefficient: str = "printed") -> np.ndarray:
    """rho*c2 as printed; ``e2_coefficient="reduced"`` substitutes -(x+1)^2 for the e2 term."""
    tau, sigma = float(TAU), float(SIGMA)
    pref = (3 * tau * x * x + tau**3 * x + tau + 2) / (
        (21 * tau + 20) * x * x + (21 * tau + 17) * x + 21 * tau + 11
    ) / math.sqrt(2)
    if e2_coefficient == "printed":
        e2 = -x * x + 3 * tau * x + 3
    elif e2_coefficient == "reduced":
        e2 = -((x + 1) ** 2)
    else:
        raise ValueError(e2_coefficient)
    return pref * np.array([(2 * sigma - 1) * x * x - tau * x - 1, e2, -(tau**3) * (x**3 + sigma)])


def tetrahedron_witness() -> GroupElement:
    u = Quaternion.pure(ZERO, INV_SQRT2, INV_SQRT2)
    return GroupElement.make(u, -u)


def icosahedron_witness() -> GroupElement:
    p = Quaternion(INV_SQRT2, INV_SQRT2, ZERO, ZERO)
    return GroupElement.make(p, p.conj())


PUBLISHED_VALUES = {
    "snub_cube_x": (1.8393, 5e-4),
    "snub_dodecahedron_x": (1.94315, 5e-5),
    "hexacontahedron_counts": (92, 180, 60),
    "icositetrahedron_vertices": 38,
}
