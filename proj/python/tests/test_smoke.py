import json
import os
import subprocess
from pathlib import Path

import pytest

import bcj

SCHEMAS = Path(os.environ.get("BCJ_SCHEMAS", Path(__file__).resolve().parents[2] / "docs" / "schemas"))
CLI = os.environ.get("BCJ_CLI")


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def test_dims_table():
    d = bcj.dims(4)
    assert (d["d"], d["dim_wedge"], d["dim_im"], d["dim_w"]) == (37, 666, 240, 426)
    assert bcj.b2_dimension(3) == 22


def test_sigma_examples():
    assert bcj.sigma_separating(2, [("a1", "b1")]) == "a1*b1"
    assert bcj.sigma_bp(2, [("a2", "b2")], "a1") == "a1*a2*b2 + a2*b2"
    assert bcj.bar(2, "a1+b1") == "a1 + b1 + 1"
    assert bcj.is_index_matched(3, "a1*b2", "b1*a3")
    assert not bcj.is_index_matched(3, "a1*b1", "a2*b2")


def test_casson_morita_round_trip():
    basis = [("a1", "b1"), ("a2", "b2")]
    assert bcj.mu_rho_separating(3, basis) == bcj.sigma_separating(3, basis)
    assert int(bcj.epsilon(1, [[2, 0], [1, -1]], [("a1", "b1")])) % 2 in (0, 1)


def test_errors_raise():
    with pytest.raises(bcj.BcjError):
        bcj.sigma_separating(2, [("a1", "a2")])
    with pytest.raises(bcj.BcjError):
        bcj.dims(bcj.MAX_GENUS + 1)


def test_search_covers_w_at_genus_four():
    r = bcj.search(4, 3, workers=2)
    assert r["w_covered"]
    assert r["rank"] == 630
    assert r["missing"] == []


def test_orbits_and_verify():
    assert bcj.orbits(4)["class_count"] == 11
    v = bcj.verify(2, trials=50, seed=3)
    assert all(c["passed"] for c in v["checks"])


def test_evaluate_catalog():
    cat = {"genus": 2, "entries": [
        {"type": "separating", "basis": [[[1, 0, 0, 0], [0, 0, 1, 0]]], "label": "sep"}]}
    (res,) = bcj.evaluate_catalog(cat)
    assert res["label"] == "sep"
    assert res["sigma"] == "a1*b1" == res["mu_rho"]


jsonschema = pytest.importorskip("jsonschema")


def test_reports_match_schemas():
    jsonschema.validate(bcj.dims(3), schema("dims_row"))
    jsonschema.validate(bcj.orbits(3), schema("orbits_report"))
    jsonschema.validate(bcj.search(3, 2, bp=True), schema("search_report"))
    jsonschema.validate(bcj.verify(2, trials=10), schema("verify_report"))


@pytest.mark.skipif(not CLI, reason="CLI path not provided")
def test_cli_outputs_match_schemas(tmp_path):
    out = tmp_path / "s.json"
    subprocess.run([CLI, "search", "--g", "3", "--max-support", "2", "--out", str(out)], check=False)
    jsonschema.validate(json.loads(out.read_text()), schema("search_output"))
    dims = subprocess.run([CLI, "dims", "--g", "1..3", "--format", "json"], capture_output=True, text=True, check=True)
    jsonschema.validate(json.loads(dims.stdout), schema("dims_output"))
    cat = tmp_path / "cat.json"
    cat.write_text(json.dumps({"genus": 2, "entries": [
        {"type": "bp", "basis": [[[0, 1, 0, 0], [0, 0, 0, 1]]], "C": [1, 0, 0, 0]}]}))
    jsonschema.validate(json.loads(cat.read_text()), schema("catalog"))
    ev = subprocess.run([CLI, "eval", str(cat), "--format", "json"], capture_output=True, text=True, check=True)
    jsonschema.validate(json.loads(ev.stdout), schema("eval_output"))
    for cmd, name in [(["orbits", "--g", "3"], "orbits_output"), (["verify", "--g", "2", "--trials", "5"], "verify_output"),
                      (["search", "--g", "2", "--max-support", "2"], "search_output")]:
        r = subprocess.run([CLI, *cmd, "--format", "json"], capture_output=True, text=True)
        assert r.returncode in (0, 1), r.stderr
        jsonschema.validate(json.loads(r.stdout), schema(name))
    lm = {"genus": 1, "L": [[2, 0], [1, -1]]}
    jsonschema.validate(lm, schema("linking_matrix"))
