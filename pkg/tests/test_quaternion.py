from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings

from chiralpoly.field import INV_SQRT2, ONE, SQRT2, ZERO, ExactScalar
from chiralpoly.quaternion import (
    E0,
    E1,
    E2,
    E3,
    GroupElement,
    Quaternion,
    apply,
    compose,
    element_order,
    inverse,
    reflection_from_root,
    scalar_product,
)

from .strategies import quaternions, unit_quaternions


def test_hamilton_table():
    assert E1 * E2 == E3 and E2 * E3 == E1 and E3 * E1 == E2
    assert E2 * E1 == -E3
    for e in (E1, E2, E3):
        assert e * e == -E0


def test_conjugate_and_norm():
    q = Quaternion(*(ExactScalar(v) for v in (1, 2, 3, 4)))
    assert q * q.conj() == E0.scale(ExactScalar(30))
    assert q.norm2() == 30


@settings(max_examples=40, deadline=None)
@given(quaternions(), quaternions(), quaternions())
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(quaternions(), quaternions())
def test_norm_multiplicative(a, b):
    assert (a * b).norm2() == a.norm2() * b.norm2()
    assert (a * b).conj() == b.conj() * a.conj()


@settings(max_examples=30, deadline=None)
@given(unit_quaternions(), unit_quaternions(), quaternions())
def test_actions_preserve_scalar_product(p, q, v):
    w = Quaternion(ZERO, v.q1, v.q2, v.q3)
    for star in (False, True):
        g = GroupElement.make(p, q, star)
        assert apply(g, w).norm2() == w.norm2()


@settings(max_examples=30, deadline=None)
@given(unit_quaternions(), unit_quaternions(), unit_quaternions(), unit_quaternions(), quaternions())
def test_compose_matches_sequential_application(p1, q1, p2, q2, v):
    w = Quaternion(ZERO, v.q1, v.q2, v.q3)
    for s1 in (False, True):
        for s2 in (False, True):
            g = GroupElement.make(p1, q1, s1)
            h = GroupElement.make(p2, q2, s2)
            assert apply(compose(g, h), w) == apply(g, apply(h, w))
            assert compose(g, inverse(g)).is_identity()
            assert compose(inverse(h), h).is_identity()


def test_canonical_sign():
    p = Quaternion(ExactScalar(-1), ZERO, ZERO, ZERO)
    g = GroupElement.make(p, p)
    assert g == GroupElement.identity()


def test_reflection():
    r = reflection_from_root(Quaternion.pure(SQRT2, ZERO, ZERO))
    x = Quaternion.pure(ONE, ExactScalar(2), ExactScalar(3))
    assert apply(r, x) == Quaternion.pure(-ONE, ExactScalar(2), ExactScalar(3))
    assert element_order(r) == 2
    np.testing.assert_allclose(r.matrix(), np.diag([-1.0, 1.0, 1.0]), atol=1e-15)


def test_reflection_rejects_bad_roots():
    with pytest.raises(ValueError):
        reflection_from_root(Quaternion.pure(ONE, ZERO, ZERO))
    with pytest.raises(ValueError):
        reflection_from_root(Quaternion(ONE, ONE, ZERO, ZERO))


def test_matrix_is_orthogonal():
    p = Quaternion(INV_SQRT2, INV_SQRT2, ZERO, ZERO)
    g = GroupElement.make(p, p.conj())
    m = g.matrix()
    np.testing.assert_allclose(m @ m.T, np.eye(3), atol=1e-15)
    assert np.linalg.det(m) == pytest.approx(1.0)
    gs = GroupElement.make(p, p.conj(), True)
    assert np.linalg.det(gs.matrix()) == pytest.approx(-1.0)


def test_scalar_product_is_dot():
    a = Quaternion(*(ExactScalar(v) for v in (1, 2, 3, 4)))
    b = Quaternion(*(ExactScalar(v) for v in (4, 3, 2, 1)))
    assert scalar_product(a, b) == 20
    half = (a.conj() * b + b.conj() * a).scale(ExactScalar(1) / 2)
    assert half == E0.scale(ExactScalar(20))
