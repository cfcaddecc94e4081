from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chiralpoly import solids as so
from chiralpoly.export import canonicalize, fmt, jsonable, parse_off, to_json, to_obj, to_off
from chiralpoly.field import TAU
from chiralpoly.mesh import build_faces


def _mesh(kind="snub_cube", precision=12):
    s = so.construct(kind)
    return canonicalize(build_faces(s.array(), s.spec, s.group), precision)


def test_fmt_normalises_negative_zero():
    assert fmt(-0.0, 3) == "0.000"
    assert fmt(-1e-15, 6) == "0.000000"
    assert fmt(-0.5, 2) == "-0.50"


def test_off_layout():
    text = to_off(_mesh())
    lines = text.splitlines()
    assert lines[0] == "OFF"
    assert lines[1] == "24 38 60"
    assert len(lines) == 2 + 24 + 38
    assert text.endswith("\n")


def test_obj_is_one_based():
    text = to_obj(_mesh("tetrahedron"))
    faces = [ln for ln in text.splitlines() if ln.startswith("f ")]
    idx = {int(t) for ln in faces for t in ln.split()[1:]}
    assert min(idx) == 1 and max(idx) == 4


def test_canonical_ordering():
    m = _mesh()
    keys = [tuple(float(c) for c in v) for v in m.vertices]
    assert keys == sorted(keys)
    for f in m.faces:
        assert f[0] == min(f)
    assert list(m.faces) == sorted(m.faces, key=lambda f: (f[0], f))


@pytest.mark.parametrize("precision", [4, 8, 12])
def test_off_round_trip(precision):
    m = _mesh("pentagonal_icositetrahedron", precision)
    assert parse_off(to_off(m)) == m


def test_parse_off_rejects_garbage():
    with pytest.raises(ValueError):
        parse_off("PLY\n")


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_output_independent_of_input_order(seed):
    s = so.construct("snub_cube")
    pts = s.array()
    shuffled = pts[np.random.default_rng(seed).permutation(len(pts))]
    assert to_off(canonicalize(build_faces(pts))) == to_off(canonicalize(build_faces(shuffled)))


def test_json_schema_and_strings():
    s = so.construct("snub_cube")
    m = canonicalize(build_faces(s.array()))
    doc = json.loads(to_json(m, "snub_cube", "left", s.spec.constants, {"V": 24}, 12))
    assert list(doc) == ["solid", "handedness", "constants", "vertices", "faces", "analysis"]
    assert doc["handedness"] == "left"
    assert doc["constants"]["x"].startswith("1.839286755")
    assert all(isinstance(c, str) for v in doc["vertices"] for c in v)


def test_jsonable_exact_scalar():
    out = jsonable(TAU, 6)
    assert out == {"decimal": "1.618034", "exact": "1/2 + 1/2*√5"}
