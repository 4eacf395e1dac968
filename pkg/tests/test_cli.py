import json

from quintic_curves.cli import main
from quintic_curves.curves import curve_to_json, random_curve
from quintic_curves.field import FieldConfig


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cohomology_line(capsys):
    code, out, _ = run(capsys, "cohomology", "--line", "--k", "5")
    assert code == 0
    assert json.loads(out) == {"d": 1, "k": 5, "rank": 6, "h0": 120, "h1": 0}


def test_cohomology_random_d26(capsys):
    code, out, _ = run(capsys, "cohomology", "--random", "--d", "26", "--k", "5", "--seed", "7")
    assert code == 0
    assert json.loads(out)["h1"] >= 5


def test_cohomology_deterministic(capsys):
    _, out1, _ = run(capsys, "cohomology", "--random", "--d", "6", "--seed", "3")
    _, out2, _ = run(capsys, "cohomology", "--random", "--d", "6", "--seed", "3")
    assert out1 == out2


def test_cohomology_curve_file(tmp_path, capsys):
    path = tmp_path / "curve.json"
    path.write_text(curve_to_json(random_curve(4, FieldConfig(), 0)))
    code, out, _ = run(capsys, "cohomology", "--curve-file", str(path), "--k", "5")
    assert code == 0
    assert json.loads(out)["h0"] == 105


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "cohomology", "--curve-file", "/no/such/file")
    assert code == 2 and "error" in err


def test_bad_twist_exit_2(capsys):
    code, _, _ = run(capsys, "cohomology", "--line", "--k", "0")
    assert code == 2


def test_dims_rows(capsys):
    code, out, _ = run(capsys, "dims", "--d-min", "12", "--d-max", "24")
    assert code == 0
    rows = {row["d"]: row for row in json.loads(out)}
    assert rows[12]["dim_J2"] == 125 and rows[12]["verdict"] == "reducible"
    assert rows[13]["dim_K"] == 125
    assert rows[24]["hyp_bound_t2"] == 120


def test_dims_csv(capsys):
    code, out, _ = run(capsys, "dims", "--d-min", "1", "--d-max", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("d,verdict")
    assert len(lines) == 3


def test_dims_bad_range(capsys):
    code, _, _ = run(capsys, "dims", "--d-min", "5", "--d-max", "40")
    assert code == 2


def test_experiment_roundtrip(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "sampler": "random", "d": 5, "property": "m0_membership",
        "samples": 4, "seed": 1}))
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "experiment", str(cfg), "--out", str(out_path))
    assert code == 0
    assert out.startswith("frequency 1.0")
    report = json.loads(out_path.read_text())
    assert report["config"]["samples"] == 4
    assert len(report["samples"]) == 4


def test_experiment_schema_violation(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"sampler": "random", "d": 5, "bogus": 1}))
    code, _, err = run(capsys, "experiment", str(cfg))
    assert code == 2
    assert "bogus" in err and "property" in err
