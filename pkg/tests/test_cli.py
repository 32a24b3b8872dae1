import io
import json
import subprocess
import sys

import pytest

from stellarkit import complex_core as cc
from stellarkit.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def tri(tmp_path):
    path = tmp_path / "tri.cplx"
    path.write_text(cc.write_cplx(cc.boundary_of_simplex(3)))
    return str(path)


@pytest.fixture
def octa(tmp_path):
    path = tmp_path / "octa.json"
    path.write_text(json.dumps(cc.complex_to_dict(cc.octahedron())))
    return str(path)


def test_unproject_text_and_json(tri):
    code, out, _ = call("unproject", "--in", tri, "--sigma", "1,2", "--format", "text")
    assert code == 0 and out == "x4*z - x1*x2, x4*x3\n"
    code, out, _ = call("unproject", "--in", tri, "--sigma", "1,2")
    data = json.loads(out)
    assert {"name": "z", "deg": 1} in data["vars"]
    code, out, _ = call("unproject", "--in", tri, "--sigma", "1,2", "--deg1", "--format", "text")
    assert out == "x4*z - x1*x2, x4*x3\n"


def test_complex_verbs(tri, octa, tmp_path):
    code, out, _ = call("complex", "info", "--in", octa)
    info = json.loads(out)
    assert code == 0 and info["f_vector"] == [1, 6, 12, 8] and info["reduced_homology"] == [0, 0, 0, 1]
    assert info["h_polynomial"] == [1, 3, 3, 1]
    _, out, _ = call("complex", "faces", "--in", tri)
    assert len(json.loads(out)["faces"]) == 7
    _, out, _ = call("complex", "link", "--in", octa, "--sigma", "1")
    link = json.loads(out)
    assert link["vertices"] == [2, 3, 5, 6] and link["index_map"]["5"] == 3
    target = tmp_path / "sq.cplx"
    code, _, _ = call("complex", "stellar", "--in", tri, "--sigma", "1,2",
                      "--format", "text", "--out", str(target))
    assert code == 0 and cc.load_complex(target) == cc.stellar_subdivision(cc.boundary_of_simplex(3), (1, 2))
    _, out, _ = call("complex", "join", "--in", tri, "--in2", tri)
    assert len(json.loads(out)["facets"]) == 9
    _, out, _ = call("complex", "stacked", "--d", "3", "--m", "6", "--choices", "2,0")
    assert json.loads(out)["facet_choices"] == [2, 0]


def test_gorenstein_verb(tmp_path, octa):
    code, out, _ = call("gorenstein", "--in", octa)
    assert code == 0 and json.loads(out)["gorenstein_star"] is True
    rem = tmp_path / "rem.cplx"
    rem.write_text("m 3\n1 2\n1 3\n")
    code, out, _ = call("gorenstein", "--in", str(rem), "--p", "3")
    data = json.loads(out)
    assert code == 0 and data == {"gorenstein_star": False, "p": 3, "witness": [], "profile": [0, 0, 0]}


def test_ideal_verbs(octa):
    _, out, _ = call("ideal", "sr", "--in", octa)
    assert json.loads(out)["generators"] == [[1, 4], [2, 5], [3, 6]]
    _, out, _ = call("ideal", "colon", "--in", octa, "--sigma", "1,2")
    assert json.loads(out)["generators"] == [[4], [5]]
    _, out, _ = call("ideal", "annihilator", "--in", octa, "--sigma", "1,2")
    assert json.loads(out)["generators"] == [[1, 2]]
    _, out, _ = call("ideal", "annihilator", "--in", octa, "--ideal", "4;5")
    assert json.loads(out)["generators"] == [[1, 2]]


def test_betti_methods_agree(tmp_path):
    pent = tmp_path / "pent.cplx"
    pent.write_text(cc.write_cplx(cc.cycle_complex(5)))
    tables = []
    for argv in (["--method", "km", "--d", "2", "--m", "5"],
                 ["--method", "closed", "--d", "2", "--m", "5"],
                 ["--method", "hochster", "--in", str(pent)],
                 ["--method", "hochster", "--d", "2", "--m", "5"]):
        code, out, _ = call("betti", *argv)
        assert code == 0
        tables.append(json.loads(out))
    assert all(t == tables[0] for t in tables)
    assert tables[0]["entries"] == [[0, 0, 1], [1, 2, 5], [2, 3, 5], [3, 5, 1]]
    _, text, _ = call("betti", "--method", "closed", "--d", "2", "--m", "5", "--format", "text")
    assert text.splitlines()[1] == "total: 1 5 5 1"


def test_betti_km_on_file(tmp_path):
    path = tmp_path / "ex.cplx"
    path.write_text("m 5\n1 2 4\n1 2 5\n1 3 4\n1 3 5\n2 3 4\n2 3 5\n")
    code, out, _ = call("betti", "--method", "km", "--in", str(path), "--sigma", "1,2")
    table = json.loads(out)
    assert code == 0 and sum(b for i, _, b in table["entries"] if i == 1) == 5


def test_theta_verb():
    _, out, _ = call("theta", "--d", "2", "--m", "5")
    assert json.loads(out)["theta"] == [0, 3, 2, 0]
    _, out, _ = call("theta", "--d", "2", "--m", "5", "--i", "1")
    assert json.loads(out)["theta"] == 3


def test_fan_verbs(tri, tmp_path):
    target = tmp_path / "fan.json"
    code, _, _ = call("fan", "build", "--in", tri, "--sigma", "1,2", "--out", str(target))
    assert code == 0 and len(json.loads(target.read_text())["cones"]) == 3
    code, out, _ = call("fan", "check", "--in", str(target))
    assert code == 0 and json.loads(out) == {"fan": True}
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"rank": 1, "rays": [[1], [-1]], "cones": [[0, 1]]}))
    code, out, _ = call("fan", "check", "--in", str(bad))
    assert code == 0 and json.loads(out)["violation"] == [0]
    _, out, _ = call("fan", "example-p3", "--subdivided")
    assert len(json.loads(out)["cones"]) == 4


def test_verify_verb():
    code, out, _ = call("verify", "triangle")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["checks"]
    code, out, _ = call("verify", "h-identity", "--seed", "7")
    assert code == 0 and json.loads(out)["ok"]


def test_domain_errors_exit_1(tri):
    code, out, err = call("unproject", "--in", tri, "--sigma", "1")
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "FaceTooSmall"
    code, _, err = call("theta", "--d", "1", "--m", "5")
    assert code == 1 and json.loads(err)["error"] == "OutOfRange"


def test_usage_errors_exit_2(tri, tmp_path):
    assert call("frobnicate")[0] == 2
    assert call("complex", "link", "--in", tri)[0] == 2
    assert call("complex", "info", "--in", str(tmp_path / "missing.cplx"))[0] == 2
    assert call("betti", "--method", "closed")[0] == 2


def test_module_entry_point(tri):
    res = subprocess.run([sys.executable, "-m", "stellarkit", "unproject", "--in", tri,
                          "--sigma", "1,2", "--format", "text"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "x4*z - x1*x2, x4*x3\n"
