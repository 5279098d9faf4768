"""End-to-end checks of the ellipsoid-lab command line interface."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("ELLIPSOID_LAB_CLI", "ellipsoid-lab")


def run_cli(*args, **kwargs):
    return subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=120, **kwargs
    )


def test_risk_json():
    r = run_cli("risk", "--model", '{"kind":"explicit","values":[1]}', "--sigma", "1")
    assert r.returncode == 0, r.stderr
    payload = json.loads(r.stdout)
    assert payload["linear_risk"] == pytest.approx(0.5, rel=1e-10)
    assert payload["critical_radius"] == pytest.approx(0.5, rel=1e-10)
    assert set(payload) >= {
        "sigma",
        "critical_radius",
        "linear_risk",
        "psi_residual",
        "bracket_low",
        "bracket_high",
        "b_sigma",
        "vacuous",
        "solver_iterations",
    }


def test_malformed_model_exits_1_with_error_json():
    r = run_cli("risk", "--model", '{"kind":"bogus"}', "--sigma", "1")
    assert r.returncode == 1
    err = json.loads(r.stderr)
    assert err["error"] == "MODEL_PARSE"


def test_numerical_failure_exits_2():
    r = run_cli(
        "entropy",
        "--model",
        '{"kind":"polynomial","c":1.0,"alpha":1.0,"cap":100}',
        "--epsilon",
        "1e-6",
    )
    assert r.returncode == 2
    err = json.loads(r.stderr)
    assert err["error"] == "OverflowBudget"


def test_risk_sweep_csv_determinism(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    args = (
        "risk-sweep",
        "--model",
        '{"kind":"polynomial","c":1.0,"alpha":1.0}',
        "--grid-start",
        "1e-3",
        "--grid-stop",
        "1e-1",
        "--grid-points",
        "7",
        "--grid-scale",
        "log",
    )
    assert run_cli(*args, "--output", str(out1)).returncode == 0
    assert run_cli(*args, "--output", str(out2)).returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    header = out1.read_text().splitlines()[0]
    assert header == "sigma,eps_sigma,R_L,bracket_low,b_sigma"


def test_entropy_csv_columns():
    r = run_cli(
        "entropy",
        "--model",
        '{"kind":"explicit","values":[1,0.5]}',
        "--epsilon",
        "0.3",
        "--format",
        "csv",
    )
    assert r.returncode == 0, r.stderr
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "epsilon,lower,upper,estimate,error_magnitude"
    assert len(lines) == 2


def test_integrals_grid_json():
    r = run_cli(
        "integrals",
        "--model",
        '{"kind":"explicit","values":[1]}',
        "--tau",
        "2",
        "--epsilon",
        "0.5",
        "--method",
        "both",
    )
    assert r.returncode == 0, r.stderr
    rows = json.loads(r.stdout)
    assert len(rows) == 2
    assert rows[0]["method"] == "exact_sum"
    assert rows[0]["value"] == pytest.approx(1.0)
    assert rows[1]["method"] == "quadrature"
    assert rows[1]["value"] == pytest.approx(1.0, abs=1e-9)


def test_asymptotics_sweep_csv():
    r = run_cli(
        "asymptotics",
        "--family",
        '{"kind":"polynomial","c":1.0,"alpha":1.0}',
        "--quantity",
        "entropy",
        "--grid-start",
        "1e-4",
        "--grid-stop",
        "1e-1",
        "--grid-points",
        "4",
        "--format",
        "csv",
    )
    assert r.returncode == 0, r.stderr
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "param,exact,predicted,ratio"
    last_ratio = float(lines[1].split(",")[3])  # grid ascends; first row is 1e-4
    assert abs(last_ratio - 1.0) < 0.01


def test_sobolev_spectrum_csv():
    r = run_cli("sobolev", "--lengths", "1", "--k", "1", "--s-max", "50")
    assert r.returncode == 0, r.stderr
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "index,lambda,mu"
    assert len(lines) == 3  # pi^2 and 4 pi^2


def test_simulate_deterministic():
    args = (
        "simulate",
        "--model",
        '{"kind":"explicit","values":[1]}',
        "--sigma",
        "1",
        "--trials",
        "20000",
        "--seed",
        "7",
    )
    r1 = run_cli(*args)
    r2 = run_cli(*args)
    assert r1.returncode == 0, r1.stderr
    assert r1.stdout == r2.stdout
    payload = json.loads(r1.stdout)
    assert abs(payload["mean"] - 0.5) < 5 * payload["std_error"]


def test_config_file_with_flag_override(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(
        json.dumps(
            {
                "model": '{"kind":"explicit","values":[1]}',
                "sigma": 0.5,
            }
        )
    )
    # Flag overrides the config value.
    r = run_cli("risk", "--config", str(config), "--sigma", "1")
    assert r.returncode == 0, r.stderr
    assert json.loads(r.stdout)["sigma"] == 1.0
    # Config value used when the flag is absent.
    r2 = run_cli("risk", "--config", str(config))
    assert r2.returncode == 0, r2.stderr
    assert json.loads(r2.stdout)["sigma"] == 0.5


def test_format_extension_mismatch(tmp_path):
    r = run_cli(
        "risk",
        "--model",
        '{"kind":"explicit","values":[1]}',
        "--sigma",
        "1",
        "--output",
        str(tmp_path / "report.csv"),
        "--format",
        "json",
    )
    assert r.returncode == 1
    assert json.loads(r.stderr)["error"] == "CONFIG"


def test_sobolev_weyl_and_riesz_quantities():
    r = run_cli(
        "sobolev",
        "--lengths",
        "1,1",
        "--k",
        "1",
        "--quantity",
        "weyl",
        "--grid-start",
        "1e3",
        "--grid-stop",
        "1e5",
        "--grid-points",
        "3",
    )
    assert r.returncode == 0, r.stderr
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "param,exact,one_term,two_term"
    _, exact, one, two = (float(v) for v in lines[-1].split(","))
    assert abs(exact - two) < abs(exact - one)

    r = run_cli(
        "sobolev",
        "--lengths",
        "1",
        "--k",
        "1",
        "--quantity",
        "riesz",
        "--grid-start",
        "0.01",
        "--grid-stop",
        "0.1",
        "--grid-points",
        "3",
    )
    assert r.returncode == 0, r.stderr
    first = r.stdout.strip().splitlines()[1].split(",")
    assert float(first[1]) == pytest.approx(float(first[2]), rel=0.05)


def test_verify_suite_sobolev():
    r = run_cli("verify", "--suite", "sobolev")
    assert r.returncode == 0, r.stdout + r.stderr
    assert "[PASS] criterion 8" in r.stdout
    assert "[PASS] criterion 9" in r.stdout
