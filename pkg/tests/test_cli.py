import io
import json

import pytest

from modgray import catalog, formats
from modgray.cli import main

from conftest import OCTOCODE_IMAGE


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_map_value():
    assert run("map", "--eta", "-s", "3", "--value", "6") == (0, "2 0\n", "")


def test_map_value_out_of_range():
    code, out, err = run("map", "--eta", "-s", "3", "--value", "8")
    assert code == 2 and "out of range" in err and out == ""


def test_map_xi_gap():
    code, _, err = run("map", "--xi", "-s", "5", "--value", "1")
    assert code == 2 and "xi undefined beyond s=4 (paper gap)" in err


def test_map_vector_layouts():
    assert run("map", "--eta", "-s", "3", "--vector", "1 6")[1] == "1 1 2 0\n"
    assert run("map", "--eta", "-s", "3", "--layout", "split", "--vector", "1,6")[1] == "1 2 1 0\n"
    assert run("map", "--carlet", "-p", "3", "-s", "2", "--value", "4")[1] == "1 2 0\n"
    assert run("map", "--compose", "-s", "3", "--value", "3")[1] == "0 1 1 0\n"
    assert run("map", "--vega", "-s", "4", "--value", "5")[1] == "1 1 3 3\n"


def test_map_octocode_reproduces_printed_matrix():
    code, out, _ = run("map", "--xi", "-s", "3", "--layout", "split", "--matrix", "octocode_z8")
    assert code == 0
    mf = formats.loads(out)
    assert mf.matrix.tolist() == OCTOCODE_IMAGE
    assert mf.meta["fixture octocode_image_expected"] == "matches"
    assert "eta" in mf.meta["label"] and "xi" in mf.meta["label"]


def test_map_octocode_with_eta_is_flagged():
    _, out, _ = run("map", "--eta", "-s", "3", "--layout", "split", "--matrix", "octocode_z8", "--json")
    rep = json.loads(out)
    assert rep["violations"] == ["output differs from octocode_image_expected"]


def test_map_matrix_file(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("ring p=2 s=2 n=2 rows=1\n1 3\n")
    code, out, _ = run("map", "--eta", "-s", "2", "--matrix", str(f))
    assert code == 0 and out == "ring p=2 s=1 n=4 rows=1\n0 1 1 0\n"
    code, _, err = run("map", "--eta", "-s", "3", "--matrix", str(f))
    assert code == 2 and "Z_8" in err


def test_verify_isometry():
    code, out, _ = run("verify", "isometry", "--eta", "-s", "5", "--weight", "homogeneous")
    assert code == 0 and out == "1024 pairs, 0 violations\n"


def test_verify_isometry_violation_exit():
    code, out, _ = run("verify", "isometry", "--xi", "-s", "3")
    assert code == 1 and out.startswith("64 pairs, 8 violations")


def test_verify_isometry_cap():
    code, _, err = run("verify", "isometry", "--eta", "-s", "4", "--length", "3", "--cap", "100")
    assert code == 3 and "cap" in err
    code, out, _ = run("verify", "isometry", "--eta", "-s", "3", "--length", "2", "--cap", "100", "--force")
    assert code == 0 and out.startswith("4096 pairs")


def test_verify_other():
    assert run("verify", "composition", "-s", "4") == (0, "exact match under default point order\n", "")
    assert run("verify", "rm-image", "-s", "2") == (0, "true\n", "")
    assert run("verify", "basis-independence", "octocode_z8") == (0, "true\n", "")
    code, _, err = run("verify", "composition")
    assert code == 2


def test_code_commands():
    assert run("code", "cardinality", "octocode_z8") == (0, "4096\n", "")
    code, out, _ = run("code", "min-distance", "octocode_z8")
    assert code == 0 and len(out.splitlines()) == 5
    # regression constants from the exhaustive 4096-word scan
    assert run("code", "min-distance", "octocode_z8", "--weight", "hamming")[1] == "4\n"
    assert run("code", "min-distance", "octocode_z8", "--weight", "homogeneous")[1] == "10\n"
    assert run("code", "self-orthogonal", "octocode_z8")[1] == "self-orthogonal: true\nself-dual: true\n"


def test_code_standard_form(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("ring p=2 s=2 n=2 rows=2\n1 1\n0 2\n")
    code, out, _ = run("code", "standard-form", str(f))
    assert code == 0 and out.splitlines()[0] == "profile: 1 1 0"
    code, out, _ = run("code", "dual", str(f))
    assert out == "ring p=2 s=2 n=2 rows=1\n2 2\n"
    code, out, _ = run("code", "enumerate", str(f))
    assert out.splitlines() == ["0 0", "0 2", "1 1", "1 3", "2 0", "2 2", "3 1", "3 3"]


def test_code_enumeration_cap(monkeypatch):
    monkeypatch.setenv("RINGCODE_CAP", "100")
    code, out, err = run("code", "enumerate", "octocode_z8")
    assert code == 3 and out == ""
    code, out, _ = run("code", "enumerate", "octocode_z8", "--force")
    assert code == 0 and len(out.splitlines()) == 4096


def test_code_trivial(tmp_path):
    f = tmp_path / "z.txt"
    f.write_text("ring p=3 s=1 n=2 rows=1\n0 0\n")
    assert run("code", "min-distance", str(f), "--weight", "lee")[1] == "trivial code\n"


def test_json_report_is_deterministic():
    a = run("code", "cardinality", "octocode_z8", "--json")[1]
    b = run("code", "cardinality", "octocode_z8", "--json")[1]
    assert a == b
    rep = json.loads(a)
    assert set(rep) == {"command", "inputs_digest", "result", "violations", "exit_status"}
    assert rep["result"] == 4096 and rep["exit_status"] == 0


def test_json_error_report():
    code, out, _ = run("map", "--xi", "-s", "6", "--value", "0", "--json")
    assert code == 2 and json.loads(out)["exit_status"] == 2


def test_fixtures_commands():
    code, out, _ = run("fixtures", "list")
    assert code == 0 and [l.split("\t")[0] for l in out.splitlines()] == list(catalog.list_fixtures())
    for name in catalog.list_fixtures():
        assert run("fixtures", "show", name)[1] == catalog.get_fixture(name).text
    assert run("fixtures", "show", "nope")[0] == 2


@pytest.mark.parametrize("argv", [[], ["map", "-s", "3", "--value", "1"], ["frobnicate"]])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_unknown_matrix_reference():
    code, _, err = run("code", "cardinality", "/no/such/file")
    assert code == 2 and "neither a fixture" in err
