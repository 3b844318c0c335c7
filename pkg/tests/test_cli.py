import csv
import json
import os

import pytest

from cli import RunManifest, build_parser, main
from cli.main import EXIT_OK, EXIT_VALIDATION, EXIT_WORK_LIMIT


def _read_csv(path):
    with open(path, encoding="utf-8", newline="") as handle:
        return list(csv.DictReader(handle))


def test_parser_knows_every_subcommand():
    parser = build_parser()
    for command in ("sample", "skyline", "estimate", "predict", "threshold", "table", "rerun"):
        assert parser.parse_args(_minimal_args(command)).command == command


def _minimal_args(command):
    return {
        "sample": ["sample", "--n", "3", "--d", "2"],
        "skyline": ["skyline", "--in", "x.csv"],
        "estimate": ["estimate", "--stat", "skyline-count", "--n", "3", "--d", "2"],
        "predict": ["predict", "--formula", "phi_d", "--n", "10", "--d", "3"],
        "threshold": ["threshold", "--kind", "d0", "--n", "16"],
        "table": ["table", "--id", "mu-10e4"],
        "rerun": ["rerun", "--manifest", "x.json"],
    }[command]


def test_skyline_on_six_points(tmp_path, six_points_csv):
    out = str(tmp_path / "skylines.json")
    assert main(["skyline", "--in", six_points_csv, "--k", "3,4,5", "--out", out]) == EXIT_OK
    payload = json.load(open(out, encoding="utf-8"))
    assert payload["skylines"]["5"] == [0, 1, 2, 3, 4, 5]
    assert payload["skylines"]["4"] == []
    assert payload["skylines"]["3"] == []
    assert os.path.exists(RunManifest.path_for(out))


def test_skyline_algorithms_agree(tmp_path, six_points_csv):
    outputs = []
    for algorithm in ("exhaustive", "three-phase"):
        out = str(tmp_path / f"{algorithm}.json")
        assert main(["skyline", "--in", six_points_csv, "--k", "1..5", "--algorithm", algorithm, "--out", out]) == EXIT_OK
        outputs.append(json.load(open(out, encoding="utf-8"))["skylines"])
    assert outputs[0] == outputs[1]


def test_malformed_csv_exits_with_validation_code(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("x1,x2\n1,2\n3\n", encoding="utf-8")
    assert main(["skyline", "--in", str(path)]) == EXIT_VALIDATION


def test_predict_phi_minus_g(capsys):
    assert main(["predict", "--formula", "phi_minus_g", "--n", "10000", "--d", "6"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert float(payload["value_decimal"]) == pytest.approx(23.9862, abs=0.01)
    assert payload["formula_id"] == "phi_minus_g"


def test_predict_exact_rational(capsys):
    assert main(["predict", "--exact", "--formula", "cycle_mean", "--n", "10", "--d", "2"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["value_rational"] == "45/2"
    assert payload["value_decimal"] == "22.5"


def test_predict_unknown_formula():
    assert main(["predict", "--formula", "nope", "--n", "10", "--d", "3"]) == EXIT_VALIDATION
    assert main(["predict", "--exact", "--formula", "nope", "--n", "10", "--d", "3"]) == EXIT_VALIDATION


def test_predict_without_n_or_d_is_a_validation_error():
    assert main(["predict", "--formula", "phi_d", "--d", "4"]) == EXIT_VALIDATION
    assert main(["predict", "--formula", "phi_minus_g", "--n", "1000"]) == EXIT_VALIDATION


def test_threshold_value(capsys):
    assert main(["threshold", "--kind", "d0", "--n", "19683"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "4"


def test_threshold_table(tmp_path):
    out = str(tmp_path / "d1.json")
    assert main(["threshold", "--kind", "d1", "--table", "--imax", "12", "--out", out]) == EXIT_OK
    boundaries = json.load(open(out, encoding="utf-8"))["boundaries"]
    assert boundaries["9"] == "16165"
    assert boundaries["10"] == "145405"


def test_table_mu(tmp_path):
    out = str(tmp_path / "mu.csv")
    assert main(["table", "--id", "mu-10e4", "--out", out]) == EXIT_OK
    rows = {int(row["d"]): row for row in _read_csv(out)}
    assert float(rows[5]["computed_value"]) == pytest.approx(426.3, abs=0.1)
    assert float(rows[5]["paper_value"]) == 426.3


def test_table_d1_boundaries(tmp_path):
    out = str(tmp_path / "d1.csv")
    assert main(["table", "--id", "d1-boundaries", "--imax", "12", "--out", out]) == EXIT_OK
    rows = {int(row["i"]): row for row in _read_csv(out)}
    assert rows[9]["computed_value"] == "16165"
    assert rows[10]["computed_value"] == "145405"
    assert rows[12]["exact_match"] == "True"


def test_table_approx_keeps_both_published_rows(tmp_path):
    out = str(tmp_path / "approx.csv")
    assert main(["table", "--id", "approx-10e5", "--out", out]) == EXIT_OK
    rows = {int(row["d"]): row for row in _read_csv(out)}
    assert float(rows[7]["paper_value"]) == 115.31
    assert float(rows[7]["paper_mc_value"]) == 111.79
    assert float(rows[7]["computed_value"]) == pytest.approx(111.7974, abs=0.01)


def test_estimate_writes_csv(tmp_path):
    out = str(tmp_path / "estimate.csv")
    args = ["estimate", "--stat", "k-dominant-count", "--n", "20", "--d", "3", "--k", "1..3",
            "--trials", "10", "--seed", "5", "--out", out]
    assert main(args) == EXIT_OK
    rows = _read_csv(out)
    assert [row["k"] for row in rows] == ["1", "2", "3"]
    assert all(row["seed"] == "5" for row in rows)


def test_estimate_cumulative_cloud_grid(tmp_path):
    out = str(tmp_path / "curve.csv")
    args = ["estimate", "--stat", "cumulative-cloud", "--n", "15", "--d", "2", "--k", "1",
            "--m-grid", "0..14", "--trials", "5", "--out", out]
    assert main(args) == EXIT_OK
    rows = _read_csv(out)
    assert len(rows) == 15
    assert float(rows[-1]["mean"]) == 15.0


def test_work_limit_exit_code(tmp_path):
    args = ["estimate", "--stat", "skyline-count", "--n", "100000", "--d", "5", "--trials", "100",
            "--out", str(tmp_path / "never.csv")]
    assert main(args) == EXIT_WORK_LIMIT
    assert not os.path.exists(tmp_path / "never.csv")


def test_manifest_records_the_run(tmp_path, monkeypatch):
    monkeypatch.setenv("SKYLINE_SEED", "99")
    out = str(tmp_path / "sample.csv")
    assert main(["sample", "--model", "simplex", "--n", "30", "--d", "3", "--out", out]) == EXIT_OK
    manifest = RunManifest.load(RunManifest.path_for(out))
    assert manifest.subcommand == "sample"
    assert manifest.seed == 99
    assert manifest.seed_env == "99"
    assert "--seed" in manifest.argv
    assert manifest.outputs == [os.path.abspath(out)]
    assert manifest.duration_seconds >= 0


def test_rerun_reproduces_identical_bytes(tmp_path):
    out = str(tmp_path / "sample.csv")
    assert main(["sample", "--n", "25", "--d", "4", "--seed", "7", "--out", out]) == EXIT_OK
    original = open(out, "rb").read()
    os.remove(out)
    assert main(["rerun", "--manifest", RunManifest.path_for(out)]) == EXIT_OK
    assert open(out, "rb").read() == original


def test_categorical_sample(tmp_path):
    out = str(tmp_path / "grid.csv")
    assert main(["sample", "--model", "categorical", "--levels", "2,3,2", "--n", "10", "--out", out]) == EXIT_OK
    rows = _read_csv(out)
    assert len(rows) == 10
    assert list(rows[0]) == ["x1", "x2", "x3"]
