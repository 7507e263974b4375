import csv
import io
import json
import math

import pytest

from stablehcm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def usage_exit(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    capsys.readouterr()
    return exc.value.code


def test_density_levy_row(capsys):
    code, out, _ = run(capsys, "density", "--alpha", "0.5", "--rho", "1", "--x", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x,g"
    x, g = lines[1].split(",")
    assert x == "1" and round(float(g), 4) == 0.2197
    assert float(g) == pytest.approx(math.exp(-0.25) / (2 * math.sqrt(math.pi)), rel=1e-12)


def test_density_bad_alpha(capsys):
    assert usage_exit(capsys, "density", "--alpha", "1.2", "--x", "1") == 2


def test_density_needs_points(capsys):
    assert usage_exit(capsys, "density", "--alpha", "0.4") == 2


def test_density_grid_json(capsys):
    code, out, _ = run(capsys, "density", "--alpha", "0.4", "--grid", "0.1:10:50",
                       "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 50
    assert rows[0]["x"] == pytest.approx(0.1) and rows[-1]["x"] == pytest.approx(10.0)
    assert all(r["g"] > 0 for r in rows)


def test_density_numeric_failure(capsys):
    code, _, err = run(capsys, "density", "--alpha", "0.4", "--x", "0.001", "--method", "series")
    assert code == 3 and "x=0.001" in err


def test_precision_and_validation(capsys):
    _, out, _ = run(capsys, "density", "--alpha", "0.5", "--x", "1", "--precision", "6")
    assert out.splitlines()[1] == "1,0.219696"
    assert usage_exit(capsys, "density", "--alpha", "0.5", "--x", "1", "--precision", "5") == 2


def test_env_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("STABLE_HCM_TOL", "bogus")
    assert usage_exit(capsys, "density", "--alpha", "0.5", "--x", "1") == 2
    monkeypatch.setenv("STABLE_HCM_TOL", "1e-8")
    assert run(capsys, "density", "--alpha", "0.5", "--x", "1")[0] == 0


def test_galpha_half(capsys):
    code, out, _ = run(capsys, "galpha", "--alpha", "0.5", "--r", "4", "--t", "0")
    assert code == 0
    row = next(csv.DictReader(io.StringIO(out)))
    assert float(row["re"]) == pytest.approx(0.051888, abs=1e-6)
    assert float(row["im"]) == 0.0
    assert set(row) == {"r", "t", "re", "im", "log_mod", "phase_over_pi", "method_used"}


def test_galpha_cut_sign(capsys):
    code, out, _ = run(capsys, "galpha", "--alpha", "0.4", "--r", "2", "--cut", "upper",
                       "--format", "json")
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert row["im"] < 0 and row["side"] == "upper"


def test_galpha_large_cut_value_keeps_log(capsys):
    _, out, _ = run(capsys, "galpha", "--alpha", "0.4", "--r", "5000", "--cut", "upper",
                    "--format", "json")
    row = json.loads(out)["rows"][0]
    assert row["re"] is None and row["log_mod"] > 700


def test_galpha_t_on_cut_is_usage_error(capsys):
    assert usage_exit(capsys, "galpha", "--alpha", "0.4", "--r", "2", "--t", "1.0") == 2
    assert usage_exit(capsys, "galpha", "--alpha", "0.4", "--r", "2", "--t", "0.2",
                      "--cut", "upper") == 2


def test_jobs_output_identical(capsys):
    argv = ["galpha", "--alpha", "0.4", "--grid", "0.5:30:12", "--t", "0.3"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--jobs", "3")
    assert serial == parallel
    _, again, _ = run(capsys, *argv)
    assert again == serial


def test_theta_table_files(capsys, tmp_path):
    path = tmp_path / "theta.csv"
    code, _, _ = run(capsys, "theta-table", "--alpha", "0.4", "--n", "64", "-o", str(path))
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 64 and list(rows[0]) == ["t", "theta"]
    meta = json.loads(path.with_suffix(".json").read_text())
    assert meta["n"] == 64 and meta["alpha"] == 0.4
    assert abs(float(rows[-1]["theta"]) - 0.5) < 1e-3


def test_theta_table_too_small(capsys):
    assert usage_exit(capsys, "theta-table", "--alpha", "0.4", "--n", "2") == 2


def test_verify_small_z_half(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "small-z", "--alpha", "0.5")
    doc = json.loads(out)
    assert code == 0 and doc["pass"] is True and doc["failed"] == []
    rows = doc["rows"]
    assert {"name", "alpha", "measured", "expected", "tolerance", "pass"} <= set(rows[0])
    measured = [r for r in rows if isinstance(r["measured"], float)][0]["measured"]
    assert measured == pytest.approx(0.28209, abs=1e-5)


def test_verify_theta_monotone(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theta-monotone", "--alpha", "0.4")
    doc = json.loads(out)
    assert code == 0
    verdict = [r for r in doc["rows"] if r["name"] == "monotonicity verdict"][0]
    assert verdict["measured"] == "increasing" and verdict["pass"] is True


def test_verify_semigroup(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "semigroup")
    assert code == 0 and json.loads(out)["pass"] is True


def test_verify_cut_laws_reports_failure(capsys):
    # the cross-identity with g_{alpha, 1/alpha - 2} is off by a factor 2
    code, out, _ = run(capsys, "verify", "--suite", "cut-laws", "--alpha", "0.4")
    doc = json.loads(out)
    assert code == 1 and doc["pass"] is False and doc["failed"]
    assert len(doc["failed"]) == 3
    assert all("asymmetric density" in name for name in doc["failed"])


def test_verify_unknown_suite(capsys):
    assert usage_exit(capsys, "verify", "--suite", "nope") == 2


def test_verify_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "--suite", "semigroup", "--format", "csv")
    _, b, _ = run(capsys, "verify", "--suite", "semigroup", "--format", "csv")
    assert a == b and a.splitlines()[0].startswith("name,")
