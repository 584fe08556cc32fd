import csv
import subprocess
import sys

import numpy as np
import pytest

from inerton.cli import main
from inerton.fileio import parse_kv, read_series_csv, sha256_file

UNIT_CFG = "M_g = 1\nv0_cm_per_s = 1\nc_cm_per_s = 10\nT_s = 1\nN = 10\n"


@pytest.fixture
def unit_cfg(tmp_path):
    path = tmp_path / "unit.cfg"
    path.write_text(UNIT_CFG)
    return path


def kv(path):
    return {k: v for k, (v, _) in parse_kv(path.read_text()).items()}


def test_simulate_writes_series_and_manifest(tmp_path, unit_cfg):
    out = tmp_path / "run"
    assert main(["simulate", "--config", str(unit_cfg), "--l", "0", "--n-max", "1", "--samples", "50", "--out", str(out)]) == 0
    prov, t, states = read_series_csv(out / "trajectory_analytic.csv")
    assert prov == "analytic"
    assert len(t) == 51
    np.testing.assert_array_equal(states[0], [0.0, 1.0, 0.0, 10.0, 0.0])
    prov, t, states = read_series_csv(out / "trajectory_integrated.csv")
    assert prov == "integrated" and len(t) == 10_001
    manifest = kv(out / "manifest.txt")
    for name in ("trajectory_analytic.csv", "trajectory_integrated.csv"):
        assert manifest[f"file.{name}.sha256"] == sha256_file(out / name)
    assert manifest["command.name"] == "simulate"
    assert manifest["config.v0_cm_per_s"] == "1.0"


def test_simulate_is_byte_deterministic(tmp_path, unit_cfg):
    digests = []
    for _ in range(2):
        out = tmp_path / "same"
        assert main(["simulate", "--config", str(unit_cfg), "--n-max", "3", "--out", str(out)]) == 0
        digests.append({p.name: sha256_file(p) for p in sorted(out.iterdir())})
    assert digests[0] == digests[1]


def test_simulate_rejects_bad_physics(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text(UNIT_CFG.replace("c_cm_per_s = 10", "c_cm_per_s = 1"))
    assert main(["simulate", "--config", str(cfg), "--out", str(tmp_path / "o")]) == 1
    assert "v0 < c" in capsys.readouterr().err


def test_simulate_bad_slot(tmp_path, unit_cfg):
    assert main(["simulate", "--config", str(unit_cfg), "--l", "10", "--out", str(tmp_path / "o")]) == 1


def test_missing_config_file_is_io_error(tmp_path):
    assert main(["simulate", "--config", str(tmp_path / "nope.cfg"), "--out", str(tmp_path / "o")]) == 2


def test_unwritable_output_is_io_error(tmp_path, unit_cfg):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert main(["simulate", "--config", str(unit_cfg), "--out", str(blocker / "sub")]) == 2


def test_verify_default_passes(tmp_path, capsys):
    assert main(["verify", "--out", str(tmp_path)]) == 0
    report = kv(tmp_path / "verify_report.txt")
    assert report["summary.all_passed"] == "true"
    assert report["check.period_displacement_discrepancy.status"] == "info"
    assert "PASS  oracle_equivalence" in capsys.readouterr().out


def test_verify_coarse_steps_uses_tolerance_tier(tmp_path, unit_cfg):
    cfg = tmp_path / "coarse.cfg"
    cfg.write_text(UNIT_CFG + "steps_per_period = 10\n")
    assert main(["verify", "--config", str(cfg), "--out", str(tmp_path / "o")]) == 0
    report = kv(tmp_path / "o" / "verify_report.txt")
    measured = float(report["check.oracle_equivalence.measured"])
    assert measured > 1e-7
    assert measured <= float(report["check.oracle_equivalence.tolerance"])
    assert report["check.convergence_order.status"] == "pass"


def test_verify_corrupt_config(tmp_path, capsys):
    cfg = tmp_path / "corrupt.cfg"
    cfg.write_text("M_g = 1\nthis is not a pair\n")
    assert main(["verify", "--config", str(cfg)]) == 2
    assert "corrupt.cfg:2:" in capsys.readouterr().err


def test_verify_failure_exits_one(monkeypatch, tmp_path):
    from inerton import verify

    failing = verify.CheckResult("zz_forced", False, 1.0, 0.0)
    monkeypatch.setattr(verify, "CHECKS", verify.CHECKS + (lambda cfg: failing,))
    assert main(["verify", "--out", str(tmp_path)]) == 1
    report = kv(tmp_path / "verify_report.txt")
    assert report["summary.failed"] == "zz_forced"
    assert report["check.zz_forced.status"] == "fail"


def test_observables_electron(tmp_path, capsys):
    assert main(["observables", "--scenario", "electron", "--out", str(tmp_path)]) == 0
    report = kv(tmp_path / "observables.txt")
    assert float(report["lambda_cm"]) == pytest.approx(7.274e-5, rel=1e-3)
    assert float(report["Lambda_cm"]) == pytest.approx(21.81, rel=1e-3)
    assert float(report["N_estimate"]) == pytest.approx(7.274e23, rel=1e-3)
    assert report["Lambda_cm_discrepancy"] == "true"
    assert report["lambda_cm_discrepancy"] == "false"
    assert report["quoted_Lambda_cm"] == "2.0"
    assert report["J_over_h"] == "1.0"
    assert capsys.readouterr().out == (tmp_path / "observables.txt").read_text()


def test_observables_unit_config(unit_cfg, capsys):
    assert main(["observables", "--config", str(unit_cfg)]) == 0
    out = capsys.readouterr().out
    assert "ratio_c_over_v0 = 10.0\n" in out
    assert "R0" in dict(line.split(" = ") for line in out.splitlines())["defaulted"]
    assert "quoted_" not in out


def test_unknown_scenario(capsys):
    assert main(["observables", "--scenario", "muon"]) == 1
    err = capsys.readouterr().err
    assert "electron" in err and "unit" in err


def test_config_and_scenario_conflict(unit_cfg):
    assert main(["observables", "--config", str(unit_cfg), "--scenario", "unit"]) == 1


def test_figure5(tmp_path):
    assert main(["figure5", "--scenario", "unit", "--n-max", "4", "--samples", "40", "--out", str(tmp_path)]) == 0
    with open(tmp_path / "figure5.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["pi_t_over_T", "pi_X_over_lambda"]
    x, y = np.array(rows[1:], dtype=float).T
    assert x[0] == 0.0 and x[-1] == pytest.approx(4 * np.pi, rel=1e-14)
    assert np.all(np.diff(y) >= 0)
    # single-period shape: pi X/lambda = pi t/T + cos(pi t/T) - 1
    first = slice(0, 41)
    np.testing.assert_allclose(y[first], x[first] + np.cos(x[first]) - 1, atol=1e-13)
    # flat tangent at mid-period samples
    dy = np.gradient(y, x)
    assert np.all(np.abs(dy[20::40]) < 0.01)
    assert (tmp_path / "figure5.svg").read_text().startswith("<svg")


def test_figure5_deterministic(tmp_path):
    runs = []
    for _ in range(2):
        main(["figure5", "--scenario", "electron", "--out", str(tmp_path)])
        runs.append([sha256_file(tmp_path / n) for n in ("figure5.csv", "figure5.svg", "manifest.txt")])
    assert runs[0] == runs[1]


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "inerton", "observables", "--scenario", "unit"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "ratio_c_over_v0 = 10.0" in proc.stdout


@pytest.mark.parametrize("name", ["unit.cfg", "electron.cfg"])
def test_shipped_configs_verify(name, capsys):
    from pathlib import Path

    path = Path(__file__).resolve().parent.parent / "configs" / name
    assert main(["verify", "--config", str(path)]) == 0
