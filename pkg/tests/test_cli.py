"""CLI surface: fixtures, subcommands, formats, exit codes, determinism."""

import json

import pytest

from germindex.cli import main
from germindex.scenario import load_fixture


def run_cli(capsys, *argv):
    code = main(list(argv))
    caught = capsys.readouterr()
    return code, caught.out, caught.err


def test_index_remark42_f2(capsys):
    code, out, _ = run_cli(capsys, "index", "--fixture", "remark42",
                           "--germ", "origin", "--n", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["nu_A"] == 3
    assert data["delta"] == 3
    assert data["branches"] == []


def test_classify_remark43(capsys):
    code, out, _ = run_cli(capsys, "classify", "--fixture", "remark43",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    origin_rows = [r for r in data["branches"] if r["germ"] == "origin"]
    assert origin_rows == [
        {"germ": "origin", "factor": "z1", "nu_p": 1, "type": "I", "mu_p": 1}
    ]
    assert data["curves"] == [
        {"curve": "C", "prime_period": 1, "type": "I", "nu_C": 1, "tau": 1}
    ]


def test_classify_cubic_curve_table(capsys):
    code, out, _ = run_cli(capsys, "classify", "--fixture", "cubic-d4")
    assert code == 0
    # table mode shows the curve inventory rows E0..E3 with nu, tau, type
    for label in ("E0", "E1", "E2", "E3"):
        assert label in out
    assert "nu_C" in out and "tau" in out


def test_count_cubic_range(capsys):
    code, out, _ = run_cli(capsys, "count", "--fixture", "cubic-d4",
                           "--n-range", "1..3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [r["isolated_periodic"] for r in rows] == [16, 320, 5776]
    assert all(r["algebraically_stable"] for r in rows)
    assert all(r["growth_ok"] for r in rows)


def test_lefschetz_cubic(capsys):
    code, out, _ = run_cli(capsys, "lefschetz", "--fixture", "cubic-d4",
                           "--n-range", "1..2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows == [{"lefschetz": 24, "n": 1}, {"lefschetz": 328, "n": 2}]


def test_validate_cubic_clean(capsys):
    code, out, _ = run_cli(capsys, "validate", "--fixture", "cubic-d4",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["violations"] == [] and data["witness_issues"] == []
    assert data["algebraically_stable"] is True


def test_verify_remark42(capsys):
    code, out, _ = run_cli(capsys, "verify", "--fixture", "remark42",
                           "--n-max", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["all_agree"]
    by = {(c["germ"], c["n"]): c for c in data["checks"]}
    assert by[("origin", 1)]["oracle"] == 1
    assert by[("origin", 2)]["oracle"] == 3


def test_verify_remark43_positivity(capsys):
    code, out, _ = run_cli(capsys, "verify", "--fixture", "remark43",
                           "--n-max", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["all_agree"]
    kinds = {c["check"] for c in data["checks"]}
    assert kinds == {"index_positivity"}


def test_count_rejects_type_one_fixture(capsys):
    code, out, err = run_cli(capsys, "count", "--fixture", "remark43",
                             "--n-range", "1..2")
    assert code == 1
    assert out == ""
    assert json.loads(err)["error"]["kind"] == "TypeICurvePresent"


def test_missing_input_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "index")
    assert code == 2
    assert json.loads(err)["error"]["kind"] == "ScenarioError"


def test_bad_scenario_path(capsys):
    code, _, err = run_cli(capsys, "classify", "/nonexistent/file.json")
    assert code == 2


def test_empty_count_range(capsys):
    code, out, _ = run_cli(capsys, "count", "--fixture", "cubic-d4",
                           "--n-range", "3..2", "--format", "json")
    assert code == 0
    assert json.loads(out) == []


def test_json_output_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "count", "--fixture", "cubic-d4",
                         "--n-range", "1..4", "--format", "json")
    _, out2, _ = run_cli(capsys, "count", "--fixture", "cubic-d4",
                         "--n-range", "1..4", "--format", "json")
    assert out1 == out2


def test_table_output_runs(capsys):
    code, out, _ = run_cli(capsys, "index", "--fixture", "cubic-d4",
                           "--germ", "u1")
    assert code == 0
    assert "nu_A" in out and "z1" in out


def test_scenario_from_file(tmp_path, capsys):
    doc = {
        "meta": {"description": "inline test", "precision": 12},
        "germs": {"shear": {"images": ["z1 + z2", "z2"]}},
    }
    path = tmp_path / "scn.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "classify", str(path), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["branches"] == [{"germ": "shear", "factor": "z2", "nu_p": 1,
                                 "type": "II", "mu_p": 0}]
    assert data["curves"] == []


def test_declared_isolation_parses(tmp_path, capsys):
    doc = {
        "meta": {"precision": 12},
        "germs": {"g": {"images": ["z1", "z2 + z1^2"]}},
        "action": {"mode": "h1trivial", "matrix": [[1]],
                   "picard_number": 1, "algebraically_stable": True},
        "curves": [{"label": "C", "prime_period": 2, "type": "II",
                    "nu_C": 1, "self_intersection": -1}],
        "points": [{"label": "p", "prime_period": 1, "on_curves": ["C"],
                    "declared_index": {"1": 1},
                    "isolation": {"kind": "conditionally_isolated",
                                  "secondary_period": 2}}],
    }
    path = tmp_path / "scn.json"
    path.write_text(json.dumps(doc))
    from germindex.scenario import load_scenario_file
    from germindex.surface import partition_isolated_points

    scn = load_scenario_file(str(path))
    model = scn.require_model()
    pt = model.points[0]
    assert pt.declared_isolation == ("conditionally_isolated", 2)
    part = partition_isolated_points(model, horizon=4)
    assert part.conditionally == [("p", 2)]


def test_precision_override(capsys):
    code, out, _ = run_cli(capsys, "index", "--fixture", "remark42",
                           "--germ", "origin", "--precision", "10",
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["nu_A"] == 1


def test_fixture_loader_values():
    scn = load_fixture("cubic-d4")
    assert set(scn.germs) == {"u1", "u2", "u3"}
    assert scn.model is not None
    assert scn.model.action.picard_number == 7
    scn2 = load_fixture("remark42")
    assert scn2.model is None
    assert set(scn2.maps) == {"f"}


def test_second_fixed_point_localization():
    scn = load_fixture("remark42")
    germ = scn.germs["second_fixed_point"]
    from germindex import local_index

    assert local_index(germ).nu_A == 1
