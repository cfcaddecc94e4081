from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chiralpoly import reference as ref
from chiralpoly import solids as so
from chiralpoly.coxeter import DiagramId
from chiralpoly.field import SIGMA, TAU
from chiralpoly.mesh import build_faces, coplanarity_residual, set_equal


def test_tetrahedron_sets():
    left, right = so.tetrahedron_pair()
    assert left.as_set() == ref.tetrahedron_left()
    assert right.as_set() == ref.tetrahedron_right()


def test_icosahedron_sets():
    left, right = so.icosahedron_pair()
    assert left.as_set() == ref.icosahedron_left()
    assert right.as_set() == ref.icosahedron_right()


def test_icosahedron_cubic():
    for r in so.icosahedron_cubic_roots():
        assert r**3 - r**2 - r == 0


def test_dodecahedron_orbits_and_scale():
    d = so.dodecahedron_from_dual()
    for got, expected in zip(d.orbits, ref.dodecahedron_orbits()):
        assert got.as_set() == expected
    assert d.spec.constants["lambda"] == 3 * SIGMA * SIGMA
    assert d.orbit_sizes == (12, 4, 4)


def test_pyritohedron_fixed():
    p = so.pyritohedron_fixed()
    assert p.spec.constants["rho"] == ref.PYRITOHEDRON_RHO
    assert p.spec.constants["D"] == ref.PYRITOHEDRON_NORMAL
    assert p.orbits[0].as_set() == ref.pyritohedron_twelve(ref.PYRITOHEDRON_RHO)


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=1.05, max_value=1.999))
def test_pyritohedron_family_planar(a):
    s = so.pyritohedron_family(a)
    assert set_equal(s.array(), ref.pyritohedron_family_points(a), 1e-9)
    poly = build_faces(s.array())
    assert len(poly.faces) == 12
    for f, (n, _) in zip(poly.faces, poly.face_planes()):
        assert coplanarity_residual(poly.vertices[list(f)], n) < 1e-10


@pytest.mark.parametrize("a", [0.5, 1.0, 2.5, float("nan"), float("inf")])
def test_pyritohedron_degenerate(a):
    with pytest.raises(so.DegenerateParameterError):
        so.pyritohedron_family(a)


def test_snub_cube_constants():
    k = so.snub_cube_constants()
    x = k["x"]
    assert abs(x**3 - x**2 - x - 1) < 1e-14
    assert k["lambda"] == x / math.sqrt(2)
    assert k["eta"] == x**-2 / math.sqrt(2)


def test_snub_cube_orbits():
    left, right, _ = so.snub_cube_pair()
    assert len(left) == len(right) == 24
    fl, fr = ref.snub_cube_sets(so.snub_cube_constants()["x"])
    norm = np.linalg.norm(fl[0])
    assert set_equal(left.array() / np.linalg.norm(left.array()[0]), fl / norm, 1e-9)
    assert set_equal(right.array() / np.linalg.norm(right.array()[0]), fr / norm, 1e-9)


def test_snub_dodecahedron():
    left, right, _ = so.snub_dodecahedron_pair()
    assert len(left) == len(right) == 60
    k = so.snub_dodecahedron_constants()
    assert k["y"] == pytest.approx(k["y_alt"], abs=1e-12)
    assert k["x"] ** 3 - k["x"] ** 2 - k["x"] - float(TAU) == pytest.approx(0, abs=1e-13)


def test_duals_orbit_sizes():
    assert so.snub_cube_dual().orbit_sizes == (6, 8, 24)
    assert so.snub_dodecahedron_dual().orbit_sizes == (20, 12, 60)


def test_right_handed_is_mirror():
    m = so.reflect(DiagramId.B3, 1).matrix()
    left, right, _ = so.snub_cube_pair()
    assert set_equal(left.array() @ m.T, right.array())
    dl, dr = so.snub_cube_dual("left"), so.snub_cube_dual("right")
    assert set_equal(dl.array() @ m.T, dr.array())


def test_solve_cubic_without_root():
    with pytest.raises(so.ConstructionError):
        so.solve_cubic(0.0, 0.0, 100.0)


@pytest.mark.parametrize("kind", so.SOLID_KINDS)
def test_construct_all(kind):
    s = so.construct(kind)
    assert len(s.array()) >= 4


def test_construct_rejects_bad_combinations():
    with pytest.raises(ValueError):
        so.construct("tetrahedron", handedness="left")
    with pytest.raises(ValueError):
        so.construct("icosahedron", a=1.5)
    with pytest.raises(ValueError):
        so.construct("cuboctahedron")
    with pytest.raises(ValueError):
        so.quasiregular_union("nope")


@pytest.mark.parametrize("d", list(DiagramId))
@pytest.mark.parametrize("node", [1, 2, 3])
def test_fundamental_orbits_lie_on_sphere(d, node):
    o = so.fundamental_orbit(d, node)
    norms = {p.norm2() for p in o}
    assert len(norms) == 1


def test_fundamental_orbit_sizes_h3():
    assert [len(so.fundamental_orbit("H3", n)) for n in (1, 2, 3)] == [20, 30, 12]


def test_pyritohedron_rhombic_limit():
    s = so.pyritohedron_family(2.0)
    assert len(s.array()) == 14
    # b vanishes within the merge tolerance just below a = 2 as well
    assert len(so.pyritohedron_family(2.0 - 1e-15).array()) == 14
