"""Tests for the command-line front end."""

from __future__ import annotations

import csv
import json

import pytest

from py_polariton import __version__
from py_polariton.cli import main, parse_grid
from py_polariton.errors import InvalidParameters


def _read_csv(path):
    with open(path, newline="") as f:
        return list(csv.reader(f))


def _manifest(path):
    with open(str(path) + ".manifest.json") as f:
        return json.load(f)


def test_staircase_writes_csv_and_manifest(tmp_path):
    out = tmp_path / "staircase.csv"
    assert main(["staircase", "--grid", "41x5", "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert rows[0] == ["mu", "v_tilde", "p", "q", "rho", "label"]
    assert len(rows) == 1 + 41 * 5
    assert rows[1] == ["-1.1", "0", "", "", "", "vacuum"]
    labels = {row[5] for row in rows[1:]}
    assert labels <= {"vacuum", "solid", "transition"}
    solid = [row for row in rows[1:] if row[5] == "solid"]
    assert all(row[2] and row[3] and row[4] for row in solid)
    manifest = _manifest(out)
    assert manifest["subcommand"] == "staircase"
    assert manifest["conventions"]["convention"] == "calibrated"
    assert manifest["params"]["rydberg_weight_exponent"] == 2
    assert manifest["params"]["range_cutoff"] == "inf"
    assert manifest["grid"]["resolution"] == [41, 5]
    assert manifest["version"] == __version__


def test_output_is_deterministic(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (first, second):
        assert main(["melt", "--grid", "31x4", "--jperp", "0.002", "--out", str(out)]) == 0
    assert first.read_text() == second.read_text()
    a, b = _manifest(first), _manifest(second)
    for manifest in (a, b):
        manifest.pop("wall_clock")
        manifest.pop("output_path")
    assert a == b
    assert a["conventions"]["j_perp"] == 0.002


def test_melt_rejects_negative_hopping(tmp_path):
    assert main(["melt", "--jperp", "-1", "--out", str(tmp_path / "m.csv")]) == 2
    assert not (tmp_path / "m.csv").exists()


def test_config_and_convention_flag(tmp_path):
    config = tmp_path / "chain.cfg"
    config.write_text("# detuned chain\ndelta = 0.5\nrange_cutoff = 100\n")
    out = tmp_path / "s.csv"
    assert main(["staircase", "--config", str(config), "--convention", "literal", "--grid", "11x3", "--out", str(out)]) == 0
    manifest = _manifest(out)
    assert manifest["params"]["delta"] == 0.5
    assert manifest["params"]["range_cutoff"] == 100
    assert manifest["params"]["rydberg_weight_exponent"] == 4
    assert manifest["config_path"] == str(config)


def test_convention_synonym(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["staircase", "--convention", "literal", "--grid", "11x3", "--out", str(out)]) == 0
    assert main(["staircase", "--convention", "paper", "--grid", "11x3", "--out", str(out)]) == 0
    manifest = _manifest(out)
    assert manifest["params"]["rydberg_weight_exponent"] == 2
    assert manifest["conventions"]["convention"] == "calibrated"


def test_unknown_config_key(tmp_path, capsys):
    config = tmp_path / "chain.cfg"
    config.write_text("detuning = 0.5\n")
    assert main(["staircase", "--config", str(config), "--out", str(tmp_path / "s.csv")]) == 2
    assert "detuning" in capsys.readouterr().err


def test_bad_grid(tmp_path):
    assert main(["staircase", "--grid", "40by3", "--out", str(tmp_path / "s.csv")]) == 2
    assert parse_grid("8x3") == (8, 3)
    with pytest.raises(InvalidParameters):
        parse_grid("1x3")


def test_phase5_writes_both_regimes(tmp_path):
    out = tmp_path / "phase5.csv"
    assert main(["phase5", "--grid", "40x3", "--out", str(out)]) == 0
    weak = _read_csv(tmp_path / "phase5_weak.csv")
    strong = _read_csv(tmp_path / "phase5_strong.csv")
    assert weak[0] == ["mu", "t", "p", "q", "rho", "label"]
    assert "FS" in {row[5] for row in strong[1:]}
    assert "FS" not in {row[5] for row in weak[1:]}
    assert "uniform-1" in {row[5] for row in weak[1:]}
    manifest = _manifest(tmp_path / "phase5_strong.csv")
    assert manifest["conventions"]["regime"] == "strong"
    assert manifest["conventions"]["thresholds"]["strong_plrri"] is True
    assert manifest["params"]["n_max"] == 2


def test_phase5_needs_resonance(tmp_path):
    config = tmp_path / "chain.cfg"
    config.write_text("delta = 0.5\n")
    assert main(["phase5", "--config", str(config), "--grid", "10x3", "--out", str(tmp_path / "p.csv")]) == 2


def test_validate_reports_corrupted_sums(tmp_path):
    out = tmp_path / "report.json"
    assert main(["validate", "--multiplicity", "0,1", "--out", str(out)]) == 1
    report = json.loads(out.read_text())
    assert report["passed"] is False
    failed = [check["name"] for check in report["checks"] if not check["passed"]]
    assert failed == ["staircase_sequence"]
    assert report["manifest"]["conventions"]["multiplicity"] == [0.0, 1.0]


def test_validate_passes(tmp_path):
    out = tmp_path / "report.json"
    assert main(["validate", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["passed"] is True
    lines = (tmp_path / "report.json.records.jsonl").read_text().splitlines()
    records = [json.loads(line) for line in lines]
    assert len(records) == 3
    search, static, hopping = records
    assert search["filling"] == "1/3"
    assert search["config"] is not None and static["config"] is None
    assert static["ground_energy"] == pytest.approx(search["ground_energy"], abs=1e-12)
    assert hopping["ground_energy"] <= search["ground_energy"] + 1e-12
    assert hopping["params"]["t"] == 0.01


def test_validate_refuses_oversized_ring(tmp_path):
    assert main(["validate", "--ring", "30", "--out", str(tmp_path / "r.json")]) == 2


def test_params_table(capsys):
    assert main(["params", "--frequency-unit", "ordinary"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split()[0] == "quantity"
    table = {line.split()[0]: line for line in lines[1:]}
    assert table["g"].endswith("match")
    assert table["t"].endswith("discrepancy")
    assert table["v1"].endswith("convention unclear")
    assert "267.4 MHz" in table["t"]
    assert "628 MHz" in table["t"]


def test_params_needs_unit(capsys):
    assert main(["params"]) == 2
    assert "frequency_unit" in capsys.readouterr().err


def test_params_from_config(tmp_path, capsys):
    config = tmp_path / "hardware.cfg"
    config.write_text("frequency_unit = ordinary\nfinesse = 1000\n")
    assert main(["params", "--config", str(config)]) == 0
    table = {line.split()[0]: line for line in capsys.readouterr().out.splitlines()[1:]}
    assert "14.99 MHz" in table["kappa"]


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out
