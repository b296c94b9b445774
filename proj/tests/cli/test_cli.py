import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("FANLAT_CLI", "fanlat")
DATA = Path(__file__).resolve().parent.parent / "data"


def run(*args, check_code=None):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    if check_code is not None:
        assert proc.returncode == check_code, proc.stderr + proc.stdout
    return proc


def report(*args):
    return json.loads(run(*args, check_code=0).stdout)


def test_export_then_validate(tmp_path):
    path = tmp_path / "p2.json"
    run("catalog", "export", "p2", "--json", path, check_code=0)
    doc = report("validate", path)
    assert doc["valid"] is True
    assert doc["validation"] == "full"
    assert doc["maximal_cone_count"] == 3


def test_catalog_list():
    names = [e["name"] for e in report("catalog", "list")["entries"]]
    assert names[:6] == ["p2", "p1xp1", "p3", "p2xp1", "blowup_p2", "halfplane2"]


def test_duplicate_ray_is_semantic_failure():
    proc = run("validate", DATA / "duplicate_ray.json", check_code=1)
    doc = json.loads(proc.stdout)
    assert doc["valid"] is False
    assert "duplicate ray" in doc["findings"][0]


def test_overlapping_cones_fail_validation():
    run("validate", DATA / "overlapping.json", check_code=1)


def test_out_of_range_cone_index_is_parse_error():
    proc = run("validate", DATA / "bad_index.json", check_code=2)
    assert "out of range" in proc.stderr


def test_malformed_json_and_missing_file():
    run("report", DATA / "malformed.json", check_code=2)
    run("report", DATA / "missing.json", check_code=2)


def test_usage_errors():
    run(check_code=2)
    run("report", "catalog:p2", "--policy", "sideways", check_code=2)
    run("depth", "catalog:p2", "--relation", "1,1", check_code=2)
    run("localize", "catalog:p2", "--cone", "0,9", check_code=2)
    run("report", "catalog:nope", check_code=2)


def test_report_projective_plane():
    doc = report("report", "catalog:p2", "--policy", "inclusive")
    assert doc["version"] == "fanlat-report/1"
    assert doc["relations"]["basis"] == [["1", "1", "1"]]
    assert doc["policies"]["inclusive"]["depths"][0]["depth"] == 1


def test_report_product_fan_flags_policy_discrepancy():
    doc = report("report", "catalog:p2xp1")
    assert set(doc["policies"]) == {"inclusive", "exclusive"}
    (d,) = doc["discrepancies"]
    assert d["relation"] == ["1", "1", "1", "0", "0"]
    assert d["inclusive_depth"] == 1
    assert d["exclusive_depth"] == 2


def test_report_half_plane():
    doc = report("report", "catalog:halfplane2")
    assert doc["ray_lattice"]["index"] == "2"
    assert doc["complete"] is False
    assert doc["class_group"] == {"free_rank": 0, "torsion": ["2"]}


def test_depth_with_oracle():
    doc = report("depth", "catalog:p2xp1", "--policy", "both", "--max-coeff", "3")
    for rows in doc["policies"].values():
        for row in rows:
            assert row["oracle"]["confirmed"] is True
    assert [r["depth"] for r in doc["policies"]["exclusive"]] == [2, 1]


def test_depth_of_non_relation():
    proc = run("depth", "catalog:p2", "--relation", "1,0,0", check_code=1)
    assert "not a relation" in proc.stderr


def test_decompose_examples():
    doc = report("decompose", "catalog:p2", "--relation", "1,1,1")
    assert len(doc["decompositions"][0]["pieces"]) == 1
    doc = report("decompose", "catalog:p2xp1")
    assert len(doc["decompositions"]) == 2
    assert doc["all_checks_pass"] is True
    doc = report("decompose", "catalog:p2xp1", "--no-shortcut")
    assert {d["method"] for d in doc["decompositions"]} == {"routed"}
    proc = run("decompose", "catalog:p2", "--relation", "1,0,0", check_code=1)
    assert "not a relation" in proc.stderr
    run("decompose", "catalog:halfplane2", check_code=1)


def test_decompose_outside_star_lattice():
    proc = run("decompose", DATA / "hexagon.json", check_code=1)
    assert "index 3" in proc.stderr
    doc = report("filtration", DATA / "hexagon.json")
    assert doc["policies"]["inclusive"]["generation"]["penultimate_index"] == "3"


def test_localize():
    doc = report("localize", "catalog:p2", "--cone", "0")
    assert doc["quotient_rank"] == 1
    assert sorted(int(r[0]) for r in doc["rays"]) == [-1, 1]
    assert doc["relations"]["basis"] == [["1", "1"]]


def test_subdivide_blow_up(tmp_path):
    out = tmp_path / "blowup.json"
    doc = report("subdivide", "catalog:p2", "--cone", "0,1", "--ray", "1,1", "--fan-out", out)
    (trace,) = doc["traces"]
    assert trace["new_ray"] == ["1", "1"]
    (rec,) = trace["records"]
    assert rec["padded"] == ["1", "1", "1", "0"]
    assert rec["padded_is_relation"] is True
    assert rec["depth_after"] <= rec["depth_before"]
    fan = report("validate", out)
    assert fan["maximal_cone_count"] == 4


def test_subdivide_at_existing_ray():
    run("subdivide", "catalog:p2", "--cone", "0,1", "--ray", "1,0", check_code=1)


def test_conjecture_zero_trials():
    doc = report("conjecture", "catalog:p2", "--trials", "0")
    assert doc["scans"][0]["traces"] == []


def test_conjecture_is_byte_deterministic():
    args = ("conjecture", "catalog:p2xp1", "--policy", "exclusive", "--trials", "100", "--seed", "7")
    first = run(*args, check_code=0).stdout
    second = run(*args, check_code=0).stdout
    assert first == second
    assert json.loads(first)["scans"][0]["trials"] == 100


@pytest.mark.parametrize("command", ["report", "relations", "filtration", "classgroup", "depth", "decompose"])
def test_reports_are_byte_deterministic(command):
    assert run(command, "catalog:sigma_c", check_code=0).stdout == run(command, "catalog:sigma_c").stdout


def test_json_output_file(tmp_path):
    path = tmp_path / "r.json"
    proc = run("relations", "catalog:p3", "--json", path, check_code=0)
    assert proc.stdout == ""
    assert json.loads(path.read_text())["relations"]["basis"] == [["1", "1", "1", "1"]]


def test_non_simplicial_needs_trust():
    run("relations", DATA / "square_cone.json", check_code=1)
    doc = report("relations", DATA / "square_cone.json", "--trust")
    assert doc["relations"]["basis"] == [["1", "-1", "1", "-1"]]


def test_large_integers_survive():
    doc = report("relations", DATA / "big_entries.json")
    assert doc["relations"]["basis"] == [["1", "123456789012345678901234567890", "1"]]
