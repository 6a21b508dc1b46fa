"""Tests for the command-line front end: reports, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from augvar.cli import run


def _capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# ------------------------------------------------------------------ solvers

def test_solve_aug_clifford_report(capsys):
    code, out, _ = _capture(capsys, [
        "solve-aug", "--clifford", "3", "--signs", "+,+,-", "--order", "6",
        "--format", "json"])
    assert code == 0
    report = json.loads(out)
    assert report["result"]["kappa"] == "1"
    coefs = [t["coef"] for t in report["result"]["series"]]
    assert coefs[:4] == ["1", "-1/2", "1/3", "-1/4"]
    assert report["result"]["residual_order_checked"] == 6
    assert report["config"]["seed"] == 0


def test_solve_aug_from_file(tmp_path, capsys):
    rel = {"vars": ["y1", "y2"],
           "terms": [{"exp": [0, 0], "coef": "1"},
                     {"exp": [1, 0], "coef": "1"},
                     {"exp": [0, 1], "coef": "1"}]}
    path = tmp_path / "rel.json"
    path.write_text(json.dumps(rel))
    code, out, _ = _capture(capsys, [
        "solve-aug", "--input", str(path), "--order", "5", "--format", "json"])
    assert code == 0
    assert json.loads(out)["result"]["kappa"] == "-1"


def test_solve_aug_double_root_exit_2(tmp_path, capsys):
    rel = {"vars": ["y1", "y2"],
           "terms": [{"exp": [0, 0], "coef": "1"},
                     {"exp": [0, 1], "coef": "-2"},
                     {"exp": [0, 2], "coef": "1"},
                     {"exp": [1, 0], "coef": "1"}]}
    path = tmp_path / "rel.json"
    path.write_text(json.dumps(rel))
    code, out, _ = _capture(capsys, [
        "solve-aug", "--input", str(path), "--format", "json"])
    assert code == 2
    report = json.loads(out)
    assert report["result"]["error"] == "DoubleRoot"
    assert report["result"]["suggested_transform"]


def test_solve_aug_with_quotient_factor(tmp_path, capsys):
    rel = {"vars": ["y1", "y2"],
           "terms": [{"exp": [0, 0], "coef": "-2"},
                     {"exp": [1, 0], "coef": "1"},
                     {"exp": [0, 2], "coef": "1"}]}
    rel_path = tmp_path / "rel.json"
    rel_path.write_text(json.dumps(rel))
    factor_path = tmp_path / "factor.json"
    factor_path.write_text(json.dumps({"modulus": ["-2", "0", "1"]}))
    code, out, _ = _capture(capsys, [
        "solve-aug", "--input", str(rel_path), "--factor", str(factor_path),
        "--order", "6", "--format", "json"])
    assert code == 0
    report = json.loads(out)
    assert report["result"]["kappa"] == {"residue": ["0", "1"],
                                         "modulus": ["-2", "0", "1"]}


def test_solve_nilpotent_report(capsys):
    code, out, _ = _capture(capsys, [
        "solve-nilpotent", "--clifford", "2", "--signs", "+,-",
        "--multiplicity", "2", "--order", "4", "--format", "json"])
    assert code == 0
    report = json.loads(out)
    assert report["result"]["multiplicity"] == 2
    assert report["result"]["image_of_relation"] == {
        "residue": ["0", "-1"], "order": 2}


def test_solve_aug_env_order(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("AUGVAR_ORDER", "4")
    code, out, _ = _capture(capsys, [
        "solve-aug", "--clifford", "3", "--format", "json"])
    assert code == 0
    assert json.loads(out)["config"]["order"] == 4


def test_bad_order_values_are_input_errors(capsys, monkeypatch):
    code, _, err = _capture(capsys, [
        "solve-aug", "--clifford", "3", "--order", "0"])
    assert code == 1
    assert "order" in err
    monkeypatch.setenv("AUGVAR_ORDER", "banana")
    code, _, err = _capture(capsys, ["solve-aug", "--clifford", "3"])
    assert code == 1
    assert "AUGVAR_ORDER" in err


# --------------------------------------------------------------- potentials

def test_potential_and_newton_pipeline(tmp_path, capsys):
    code, out, _ = _capture(capsys, [
        "potential", "--kind", "toric", "--fan", str(_fan_file(tmp_path)),
        "--vertex=-1,-1", "--format", "json"])
    assert code == 0
    lifted = json.loads(out)["result"]["lifted_relation"]
    rel_path = tmp_path / "lifted.json"
    rel_path.write_text(json.dumps(lifted))
    code, out, _ = _capture(capsys, [
        "newton", "--input", str(rel_path), "--format", "json"])
    assert code == 0
    inv = json.loads(out)["result"]["invariants"]
    assert inv["normalized_volume"] == 3
    assert inv["edge_lattice_lengths"] == [1, 1, 1]


def _fan_file(tmp_path):
    path = tmp_path / "fan.json"
    path.write_text(json.dumps(
        {"rays": [[1, 0], [0, 1], [-1, -1]], "signs": [1, 1, 1]}))
    return path


def test_augpoly_reports_basis(tmp_path, capsys):
    rel = {"vars": ["y1", "y2"],
           "terms": [{"exp": [1, 0], "coef": "1"},
                     {"exp": [0, 1], "coef": "1"},
                     {"exp": [-1, -1], "coef": "-1"}]}
    path = tmp_path / "pot.json"
    path.write_text(json.dumps(rel))
    code, out, _ = _capture(capsys, [
        "augpoly", "--input", str(path), "--vertex=-1,-1",
        "--format", "json"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["constant_term"] == "-1"


def test_irreducible_verdicts(tmp_path, capsys):
    tri = {"vars": ["y1", "y2"],
           "terms": [{"exp": [0, 0], "coef": "1"},
                     {"exp": [1, 0], "coef": "1"},
                     {"exp": [0, 1], "coef": "1"}]}
    path = tmp_path / "tri.json"
    path.write_text(json.dumps(tri))
    code, out, _ = _capture(capsys, [
        "irreducible", "--input", str(path), "--format", "json"])
    assert code == 0
    assert json.loads(out)["result"]["verdict"] == "irreducible"

    sq = {"vars": ["y1", "y2"],
          "terms": [{"exp": [0, 0], "coef": "1"},
                    {"exp": [1, 0], "coef": "-1"},
                    {"exp": [0, 1], "coef": "-1"},
                    {"exp": [1, 1], "coef": "1"}]}
    path2 = tmp_path / "sq.json"
    path2.write_text(json.dumps(sq))
    code, out, _ = _capture(capsys, [
        "irreducible", "--input", str(path2), "--format", "json"])
    assert code == 2
    assert json.loads(out)["result"]["verdict"] == "inconclusive"


def test_distinguish(tmp_path, capsys):
    a = {"vars": ["y1", "y2"],
         "terms": [{"exp": [1, 0], "coef": "1"},
                   {"exp": [0, 1], "coef": "1"},
                   {"exp": [-1, -1], "coef": "1"}]}
    b = {"vars": ["y1", "y2"],
         "terms": [{"exp": [0, 0], "coef": "1"},
                   {"exp": [3, 0], "coef": "1"},
                   {"exp": [0, 1], "coef": "1"}]}
    pa, pb = tmp_path / "a.json", tmp_path / "b.json"
    pa.write_text(json.dumps(a))
    pb.write_text(json.dumps(b))
    code, out, _ = _capture(capsys, [
        "distinguish", "--input", str(pa), "--other", str(pb),
        "--format", "json"])
    assert code == 0
    report = json.loads(out)
    assert report["result"]["verdict"] == "distinct"
    assert report["result"]["witness"] == "edge_lattice_lengths"


# --------------------------------------------------- partitions / candidates

def test_partitions_three_sheets(capsys):
    code, out, _ = _capture(capsys, [
        "partitions", "--ell", "3", "--format", "json"])
    assert code == 0
    report = json.loads(out)
    assert report["result"]["component_count"] == 4
    assert all(r["witness_passes"] for r in report["result"]["components"])
    assert all(r["perturbations_all_fail"]
               for r in report["result"]["components"])


def test_partitions_component_listing(capsys):
    code, out, _ = _capture(capsys, [
        "partitions", "--ell", "4", "--no-check", "--format", "json"])
    assert code == 0
    assert json.loads(out)["result"]["component_count"] == 10


def test_partitions_spin_filter(capsys):
    code, out, _ = _capture(capsys, [
        "partitions", "--ell", "3", "--spins", "up,up,down",
        "--format", "json"])
    assert code == 0
    report = json.loads(out)
    assert report["result"]["component_count"] == 2
    labels = [r["partition"] for r in report["result"]["components"]]
    assert "{1,2}|{3}" in labels and "{1}|{2}|{3}" in labels


def test_check_candidate_pass_and_fail(tmp_path, capsys):
    good = {"ell": 2, "y": {"1": ["-2", "1"], "2": ["1", "-2"]},
            "a": {"12": "0", "21": "0"}, "signs": [1, 1, 1]}
    path = tmp_path / "cand.json"
    path.write_text(json.dumps(good))
    code, out, _ = _capture(capsys, [
        "check-candidate", "--input", str(path), "--format", "json"])
    assert code == 0
    assert json.loads(out)["result"]["verdict"] == "Pass"

    bad = dict(good, y={"1": ["1", "1"], "2": ["1", "-2"]})
    path.write_text(json.dumps(bad))
    code, out, _ = _capture(capsys, [
        "check-candidate", "--input", str(path), "--format", "json"])
    assert code == 2
    report = json.loads(out)
    assert report["result"]["verdict"] == "Fail"
    assert report["result"]["violated_relation"] == "delta(a_11)"


# ------------------------------------------------------------ markov / localize

def test_markov_report(capsys):
    code, out, _ = _capture(capsys, ["markov", "--bound", "30",
                                     "--format", "json"])
    assert code == 0
    report = json.loads(out)
    triples = [tuple(r["triple"]) for r in report["result"]["triples"]]
    assert (1, 5, 13) in triples and (2, 5, 29) in triples
    tagged = {tuple(r["triple"]): r.get("fibonacci")
              for r in report["result"]["triples"]}
    assert tagged[(1, 5, 13)] is True
    assert tagged[(2, 5, 29)] is None


def test_localize_table_and_identity(capsys):
    code, out, _ = _capture(capsys, [
        "localize", "--d-max", "5", "--m", "2", "--order", "5",
        "--format", "json"])
    assert code == 0
    report = json.loads(out)
    contribs = [r["contribution"] for r in report["result"]["cover_contributions"]]
    assert contribs == ["1", "-1/4", "1/9", "-1/16", "1/25"]
    assert report["result"]["multinomial_identity"]["verdict"] == "PASS"


def test_chord_degrees_report(capsys):
    code, out, _ = _capture(capsys, ["chord-degrees", "--format", "json"])
    assert code == 0
    rows = {r["chord"]: r["real_degree"]
            for r in json.loads(out)["result"]["degrees"]}
    assert rows["a_12"] == "-1/3"
    assert rows["a_13"] == "1/3"
    assert rows["a_23"] == "-1/3"


# ------------------------------------------------------------- error handling

def test_missing_file_is_input_error(capsys):
    code, _, err = _capture(capsys, ["newton", "--input", "/nonexistent.json"])
    assert code == 1
    assert "file not found" in err


def test_malformed_json_is_input_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = _capture(capsys, ["newton", "--input", str(path)])
    assert code == 1
    assert str(path) in err


def test_wrong_schema_is_input_error(tmp_path, capsys):
    path = tmp_path / "odd.json"
    path.write_text(json.dumps({"something": 1}))
    code, _, err = _capture(capsys, ["solve-aug", "--input", str(path)])
    assert code == 1


# -------------------------------------------------------------- determinism

@pytest.mark.parametrize("argv", [
    ["solve-aug", "--clifford", "3", "--signs", "+,+,-", "--order", "8"],
    ["solve-aug", "--clifford", "3", "--signs", "+,+,-", "--order", "8",
     "--format", "json"],
    ["partitions", "--ell", "3", "--format", "json"],
    ["markov", "--bound", "100", "--format", "json"],
    ["localize", "--d-max", "6", "--m", "2", "--order", "6", "--format", "json"],
    ["chord-degrees"],
])
def test_reports_are_deterministic_in_process(capsys, argv):
    code1, out1, _ = _capture(capsys, argv)
    code2, out2, _ = _capture(capsys, argv)
    assert code1 == code2
    assert out1 == out2


def test_reports_byte_identical_across_processes():
    argv = [sys.executable, "-m", "augvar.cli", "solve-aug", "--clifford", "3",
            "--signs", "+,+,-", "--order", "6", "--seed", "3",
            "--format", "json"]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
