from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chiralpoly.coxeter import (
    GROUP_ORDER,
    PRINTED_CARTAN_INV,
    ClosureError,
    DiagramId,
    build_system,
    coxeter_group,
    generate_group,
    generators,
    identity_matrix,
    mat_mul,
    proper_subgroup,
    pyritohedral_group,
    tetrahedral_closed_form,
    verify_relations,
)
from chiralpoly.field import TAU
from chiralpoly.quaternion import GroupElement, Quaternion, apply, compose, inverse, scalar_product
from chiralpoly.solids import full_group

DIAGRAMS = list(DiagramId)


@pytest.mark.parametrize("d", DIAGRAMS)
def test_roots_have_norm_two(d):
    for a in build_system(d).roots:
        assert a.is_pure() and a.norm2() == 2


@pytest.mark.parametrize("d", DIAGRAMS)
def test_cartan_duality(d):
    s = build_system(d)
    assert mat_mul(s.cartan, s.cartan_inv) == identity_matrix()
    for i, a in enumerate(s.roots):
        for j, w in enumerate(s.weights):
            assert scalar_product(a, w) == (1 if i == j else 0)


@pytest.mark.parametrize("d", DIAGRAMS)
def test_printed_cartan_inverse(d):
    assert PRINTED_CARTAN_INV[d] == build_system(d).cartan_inv


def test_h3_off_diagonal_entries():
    c = build_system(DiagramId.H3).cartan
    assert c[0][1] == -TAU and c[1][2] == -1 and c[0][2] == 0


@pytest.mark.parametrize("d", DIAGRAMS)
def test_group_order_and_closure(d):
    g = full_group(d)
    assert g.order == GROUP_ORDER[d]
    assert proper_subgroup(g).order == GROUP_ORDER[d] // 2
    assert all(not h.star for h in g.proper())
    assert g.has_inverses()


@pytest.mark.parametrize("d", [DiagramId.A1A1A1, DiagramId.A3, DiagramId.B3])
def test_closed_under_composition(d):
    assert full_group(d).is_closed()


@pytest.mark.parametrize("d", DIAGRAMS)
def test_relations(d):
    g = full_group(d)
    checks = verify_relations(g, generators(build_system(d)), d)
    assert all(c.passed for c in checks), checks


def test_tetrahedral_closed_form_matches_closure():
    assert tetrahedral_closed_form().as_set() == full_group(DiagramId.A3).as_set()


def test_pyritohedral_group():
    t_h = pyritohedral_group()
    assert t_h.order == 24
    assert t_h.as_set() <= full_group(DiagramId.B3).as_set()
    assert t_h.as_set() <= full_group(DiagramId.H3).as_set()
    assert t_h.is_closed()


def test_closure_bound_raises():
    gens = generators(build_system(DiagramId.H3))
    with pytest.raises(ClosureError):
        generate_group(gens, max_order=50)


def test_element_listing_is_deterministic():
    a = coxeter_group(DiagramId.B3).elements
    b = coxeter_group("B3").elements
    assert a == b


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(DIAGRAMS), st.data())
def test_group_acts_orthogonally_on_weights(d, data):
    g = full_group(d)
    h = data.draw(st.sampled_from(g.elements))
    k = data.draw(st.sampled_from(g.elements))
    assert compose(h, k) in g
    assert inverse(h) in g
    for w in build_system(d).weights:
        assert apply(h, w).norm2() == w.norm2()


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(DIAGRAMS), st.data())
def test_star_flag_matches_determinant(d, data):
    import numpy as np

    h = data.draw(st.sampled_from(full_group(d).elements))
    assert np.linalg.det(h.matrix()) == pytest.approx(-1.0 if h.star else 1.0)
