"""Command-line verbs, exit codes and JSON output."""

import io
import json

import pytest

from cdindex.cli import run


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def path(data_dir):
    return lambda name: str(data_dir / name)


def test_chi_and_regions_of_example_one(path):
    assert _run("chi", path("example1.toric")) == (0, "t^2 - 2*t + 3\n", "")
    assert _run("chi", path("example1.toric"), "--at", "3")[1] == "6\n"
    assert _run("regions", path("example1.toric"))[1] == "3\n"


def test_psi_toric(path):
    code, out, _ = _run("psi-toric", path("example2.toric"))
    assert code == 0 and out == "(a-b)^3 + 7*dc + 8*cd\n"
    code, _, err = _run("psi-toric", path("example1.toric"))
    assert code == 1 and "not regular" in err


def test_fvector_both_routes(path):
    for via in ("moebius", "flag_h"):
        assert _run("fvector-toric", path("example2.toric"), "--via", via)[1] == "7 15 8\n"


def test_unbounded_cube(path):
    assert _run("psi-unbounded", path("cube6.affine"))[1] == "1*ccc + 22*dc + 24*cd\n"
    code, _, err = _run("psi-central", path("cube6.affine"))
    assert code == 1 and "not central" in err


def test_poset_verbs(path):
    assert _run("abindex", path("boolean2.poset"))[1] == "1*a + 1*b\n"
    assert _run("cdindex", path("boolean2.poset"))[1] == "1*c\n"
    assert _run("zaslavsky", path("boolean2.poset"))[1] == "Z 4\nZb 1\nZt 2\nZub 2\n"
    assert _run("flag", path("boolean2.poset"))[1] == "{} f=1 h=1\n{1} f=2 h=1\n"


def test_graph_verbs(path):
    assert _run("graph-regions", path("k3.graph"))[1] == "2\n"
    assert _run("chi", path("k3.graph"))[1] == "t^3 - 3*t^2 + 2*t\n"


def test_fibers_listing(path):
    code, out, _ = _run("fibers", path("braid3.affine"))
    assert code == 0
    assert out.splitlines()[0].endswith(": 1")
    assert sum(1 for line in out.splitlines() if line.endswith(": 2")) == 3


@pytest.mark.parametrize("name", ["example2.toric", "cube6.affine", "braid3.affine", "c4.graph", "boolean2.poset"])
def test_verify_passes(path, name):
    code, out, _ = _run("verify", path(name))
    assert code == 0
    assert out and all(line.startswith("PASS") for line in out.splitlines())


def test_verify_reports_irregular_subdivision(path):
    code, out, _ = _run("verify", path("example1.toric"))
    assert code == 1
    assert "FAIL subdivision is regular" in out


def test_json_output(path):
    code, out, _ = _run("chi", path("example2.toric"), "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload == {
        "input": path("example2.toric"),
        "operation": "chi",
        "result": "t^2 - 3*t + 8",
        "checks": [],
    }


def test_errors_and_usage(path, tmp_path):
    bad = tmp_path / "bad.toric"
    bad.write_text("toric 2\n1 0 | x\n")
    code, _, err = _run("chi", str(bad))
    assert code == 1 and "line 2" in err
    assert _run("chi", str(tmp_path / "missing.toric"))[0] == 1
    assert _run("chi", path("k3.graph"), "--at", "1/0")[0] == 2
    with pytest.raises(SystemExit) as info:
        _run("nonsense", path("k3.graph"))
    assert info.value.code == 2
    code, _, err = _run("psi-toric", path("k3.graph"))
    assert code == 1 and "ToricArrangement" in err
