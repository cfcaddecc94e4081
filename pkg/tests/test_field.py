from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from chiralpoly.field import HALF, INV_SQRT2, ONE, SIGMA, SQRT2, SQRT5, TAU, ZERO, ExactScalar, embed

from .strategies import nonzero_scalars, scalars


def approx(x: ExactScalar) -> float:
    c0, c1, c2, c3 = (float(c) for c in x.coefficients)
    return c0 + c1 * math.sqrt(2) + c2 * math.sqrt(5) + c3 * math.sqrt(10)


def test_golden_ratio_identities():
    assert TAU * SIGMA == -1
    assert TAU + SIGMA == 1
    assert TAU * TAU == TAU + 1
    assert SIGMA * SIGMA == SIGMA + 1
    assert TAU**3 == 2 * TAU + 1


def test_square_roots():
    assert SQRT2 * SQRT2 == 2
    assert SQRT5 * SQRT5 == 5
    assert (SQRT2 * SQRT5) ** 2 == 10
    assert INV_SQRT2 * SQRT2 == 1
    assert HALF * 2 == ONE


def test_embed_values():
    assert embed(TAU) == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-15)
    assert embed(SIGMA) == pytest.approx((1 - math.sqrt(5)) / 2, abs=1e-15)
    assert float(INV_SQRT2) == math.sqrt(0.5)  # correctly rounded
    assert embed(3) == 3.0


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_str_is_readable():
    assert str(TAU) == "1/2 + 1/2*√5"
    assert str(ZERO) == "0"


def test_coerce_rejects_float():
    with pytest.raises(TypeError):
        ExactScalar.coerce(0.5)


@settings(max_examples=120, deadline=None)
@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@settings(max_examples=120, deadline=None)
@given(nonzero_scalars())
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert (ONE / a) * a == ONE


@settings(max_examples=120, deadline=None)
@given(scalars(), scalars())
def test_embedding_is_a_homomorphism(a, b):
    scale = 1 + abs(approx(a)) * (1 + abs(approx(b)))
    assert approx(a * b) == pytest.approx(approx(a) * approx(b), abs=1e-9 * scale * scale)
    assert approx(a + b) == pytest.approx(approx(a) + approx(b), abs=1e-9 * scale)


@settings(max_examples=150, deadline=None)
@given(scalars(), scalars())
def test_order_agrees_with_embedding(a, b):
    fa, fb = embed(a), embed(b)
    if abs(fa - fb) > 1e-9:
        assert (a < b) == (fa < fb)
    assert a.sign() == (0 if a.is_zero() else (1 if embed(a) > 0 else -1))


@settings(max_examples=100, deadline=None)
@given(scalars())
def test_conjugates_are_automorphisms(a):
    assert (a * TAU).conjugate5() == a.conjugate5() * SIGMA
    assert (a * SQRT2).conjugate2() == a.conjugate2() * (-SQRT2)
    assert a.conjugate5().conjugate5() == a


@settings(max_examples=100, deadline=None)
@given(scalars())
def test_hash_consistent_with_eq(a):
    b = ExactScalar(*a.coefficients)
    assert a == b and hash(a) == hash(b)
    assert a + Fraction(0) == a
