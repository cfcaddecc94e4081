from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from chiralpoly.cli import main
from chiralpoly.export import fmt

GOLDEN = Path(__file__).parent / "golden"
KINDS = sorted(p.stem for p in GOLDEN.glob("*.off"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ten_golden_files_present():
    assert len(KINDS) == 10


@pytest.mark.parametrize("kind", KINDS)
def test_golden_off(kind, tmp_path):
    out = tmp_path / f"{kind}.off"
    assert main(["generate", kind, "--format", "off", "--out", str(out)]) == 0
    assert out.read_bytes() == (GOLDEN / f"{kind}.off").read_bytes()


def test_generate_snub_cube_counts(capsys):
    code, out, _ = run(capsys, "generate", "snub-cube", "--handedness", "left", "--format", "off")
    assert code == 0
    assert out.splitlines()[1] == "24 38 60"


def test_generate_tetrahedron_json(capsys):
    code, out, _ = run(capsys, "generate", "tetrahedron", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert sorted(tuple(v) for v in doc["vertices"]) == sorted(
        tuple(f"{s * 0.5:.12f}" for s in signs)
        for signs in ((1, 1, 1), (1, -1, -1), (-1, -1, 1), (-1, 1, -1))
    )
    assert doc["analysis"]["chiral"] is False


def test_handedness_recorded_and_mirrored(capsys):
    _, left, _ = run(capsys, "generate", "snub-dodecahedron", "--handedness", "left", "--format", "json")
    _, right, _ = run(capsys, "generate", "snub-dodecahedron", "--handedness", "right", "--format", "json")
    dl, dr = json.loads(left), json.loads(right)
    assert dl["handedness"] == "left" and dr["handedness"] == "right"
    assert dl["vertices"] != dr["vertices"]
    # r1 of H3 reflects in the plane orthogonal to e1
    flipped = sorted(fmt(-float(v[0]), 12) + " " + " ".join(v[1:]) for v in dl["vertices"])
    assert flipped == sorted(" ".join(v) for v in dr["vertices"])


def test_precision_env(monkeypatch, capsys):
    monkeypatch.setenv("CHIRALPOLY_PRECISION", "5")
    _, out, _ = run(capsys, "generate", "icosahedron")
    assert len(out.splitlines()[2].split()[0].split(".")[1]) == 5
    monkeypatch.setenv("CHIRALPOLY_PRECISION", "abc")
    code, _, err = run(capsys, "generate", "icosahedron")
    assert code == 2 and "CHIRALPOLY_PRECISION" in err


def test_obj_format(capsys):
    code, out, _ = run(capsys, "generate", "tetrahedron", "--format", "obj")
    assert code == 0 and out.count("\nf ") + out.startswith("f ") == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["generate", "tetrahedron", "--handedness", "left"],
        ["generate", "icosahedron", "--param", "1.5"],
        ["generate", "cuboctahedron"],
        ["generate", "snub-cube", "--format", "stl"],
        ["group", "E8"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


@pytest.mark.parametrize("a", ["0.5", "2.5", "nan"])
def test_degenerate_parameter_exit_3(a, capsys):
    code, _, err = run(capsys, "generate", "pyritohedron", "--param", a)
    assert code == 3 and "construction failed" in err


def test_analyze_snub_cube(capsys):
    code, out, _ = run(capsys, "analyze", "snub-cube")
    doc = json.loads(out)
    assert code == 0
    assert doc["chiral"] is True and doc["witness"] is None
    assert abs(float(doc["constants"]["x"]) - 1.8393) < 5e-4


def test_analyze_icosahedron_witness(capsys):
    _, out, _ = run(capsys, "analyze", "icosahedron")
    doc = json.loads(out)
    assert doc["chiral"] is False
    assert doc["witness"]["star"] is False


def test_analyze_pyritohedron_tau(capsys):
    _, out, _ = run(capsys, "analyze", "pyritohedron", "--param", "1.6180339887")
    doc = json.loads(out)
    assert doc["face_transitive"] is True
    assert doc["regular"] is True


@pytest.mark.parametrize("diagram, order, proper", [("A1A1A1", 8, 4), ("A3", 24, 12), ("B3", 48, 24), ("H3", 120, 60)])
def test_group(diagram, order, proper, capsys):
    code, out, _ = run(capsys, "group", diagram)
    doc = json.loads(out)
    assert code == 0
    assert (doc["order"], doc["proper_order"]) == (order, proper)
    assert len(doc["elements"]) == order
    assert all(r["pass"] for r in doc["relations"])


def test_group_listing_stable(capsys):
    _, a, _ = run(capsys, "group", "H3")
    _, b, _ = run(capsys, "group", "H3")
    assert a == b


def test_verify(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "0 fail" in out.splitlines()[-1]
    assert "[MISPRINT] pentagonal hexacontahedron E (printed count)" in out


def test_module_entry_point(tmp_path):
    out = tmp_path / "t.off"
    r = subprocess.run(
        [sys.executable, "-m", "chiralpoly", "generate", "tetrahedron", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0
    assert out.read_text() == (GOLDEN / "tetrahedron.off").read_text()
