import io
import json
import subprocess
import sys

import pytest

from conftest import CURL, TREFOIL, bouquet2, bouquet3, nested2
from ribbonpd.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in (("B2", bouquet2()), ("B3", bouquet3()), ("N2", nested2())):
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(g.to_json()))
        paths[name] = str(p)
    signed = nested2().with_signs({"a": "+", "b": "-"})
    p = tmp_path / "N2s.json"
    p.write_text(json.dumps(signed.to_json()))
    paths["N2s"] = str(p)
    p = tmp_path / "trefoil.pd"
    p.write_text(TREFOIL)
    paths["trefoil"] = str(p)
    return paths


def test_genus(files):
    assert call("genus", files["B2"]) == (0, '{"components": [1], "total": 1}\n', "")


def test_pdual_golden(files):
    code, out, _ = call("pdual", "--edges", "a", files["B2"])
    assert code == 0
    assert json.loads(out) == {"circles": [["a+", "b-"], ["a-", "b+"]]}


def test_dual(files):
    code, out, _ = call("dual", files["B2"])
    assert code == 0 and len(json.loads(out)["circles"]) == 1


def test_biseparation(files):
    assert json.loads(call("biseparation", files["B3"])[1]) == {"exists": False}
    cert = json.loads(call("biseparation", files["B2"])[1])
    assert cert["exists"] and cert["A"] in (["a"], ["b"])
    assert cert["sequence"][0]["anchor"] is None


def test_plane_duals(files):
    assert json.loads(call("plane-duals", files["B2"])[1]) == [["a"], ["b"]]
    assert json.loads(call("plane-duals", files["B3"])[1]) == []
    assert len(json.loads(call("plane-duals", files["N2"])[1])) == 4


def test_link_tait_and_states(files):
    code, out, _ = call("link", "tait", TREFOIL)
    assert code == 0 and set(json.loads(out)["signs"].values()) == {"-"}
    assert len(json.loads(call("link", "tait", "--coloring", "1", files["trefoil"])[1])["circles"]) == 2
    assert len(json.loads(call("link", "states", TREFOIL)[1])) == 8
    deduped = json.loads(call("link", "states", "--dedupe", TREFOIL)[1])
    assert len(deduped) == 4
    assert deduped[0]["state"] == "AAA"


def test_link_diagram_of(files):
    code, out, _ = call("link", "diagram-of", files["N2s"])
    assert code == 0 and json.loads(out)["pd"].startswith("X(")
    code, out, _ = call("link", "diagrams-of", files["N2s"])
    assert code == 0 and len(json.loads(out)) == 2


def test_link_same_and_flip():
    assert json.loads(call("link", "same", TREFOIL, TREFOIL)[1]) == {"same": True}
    assert json.loads(call("link", "same", TREFOIL, CURL)[1]) == {"same": False}
    code, out, _ = call("link", "flip", TREFOIL, "--cut", "1,1")
    assert code == 0 and json.loads(out)["pd"] == TREFOIL


def test_convention_flip():
    out = json.loads(call("link", "tait", "--convention", "flip", TREFOIL)[1])
    assert set(out["signs"].values()) == {"+"}


def test_pretty(files):
    code, out, _ = call("genus", "--pretty", files["B2"])
    assert code == 0 and out == "components:\n  - 1\ntotal: 1\n"


def test_output_is_deterministic(files):
    for argv in (("link", "states", TREFOIL), ("plane-duals", files["N2"]),
                 ("oracle", "verify", "--max-edges", "2", "--samples", "3")):
        assert call(*argv) == call(*argv)


def test_exit_codes(files, tmp_path):
    code, _, err = call("link", "tait", "X(1,2,1,2)")
    assert code == 1 and json.loads(err)["error"] == "NotADiagramError"
    assert call("link", "tait", "X(1,2,3,4)")[0] == 2
    assert call("genus", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    assert call("genus", str(bad))[0] == 2
    assert call("link", "flip", TREFOIL, "--cut", "1,2")[0] == 1
    assert call("link", "flip", TREFOIL, "--cut", "1")[0] == 2
    assert call("frobnicate")[0] == 2


def test_oracle_verify_manifest(tmp_path):
    path = tmp_path / "m.json"
    code, out, _ = call("oracle", "verify", "--max-edges", "3", "--manifest", str(path))
    assert code == 0
    assert json.loads(out) == json.loads(path.read_text())
    assert json.loads(out)["mismatches"] == 0


def test_console_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "ribbonpd.cli", "genus", files["N2"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["total"] == 0
    proc = subprocess.run([sys.executable, "-m", "ribbonpd.cli", "link", "tait", "-"],
                          input=TREFOIL, capture_output=True, text=True)
    assert proc.returncode == 0
