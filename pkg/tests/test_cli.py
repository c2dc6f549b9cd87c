"""Command-line interface tests.

These drive genellip.cli.main in process.  Note on the truncated-input
examples: at the literal input r = 0.70710678 (eight digits, slightly
below 1/sqrt 2) the AGM oracle gives K = 1.854074675879721592826416 and
mu = 1.570796329203778141213892; the idealized digits 1.8540746773 /
1.5707963268 belong to the full-precision symmetry point, which is
exercised separately.
"""

import json
import math
import subprocess
import sys

import pytest

import genellip.cli as cli
from genellip.verify import CheckSpec, GridDim, GridSpec, registry


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# --------------------------------------------------------------------------
# eval

def test_eval_m_classical(capsys):
    code, out, _ = run_cli(capsys, "eval", "M", "--a", "0.5", "--b", "0.5",
                           "--c", "1", "--z", "0.3")
    assert code == 0
    first = out.splitlines()[0]
    assert first.startswith("0.318309886")
    assert float(first) == pytest.approx(1.0 / math.pi, rel=1e-11)
    assert "method = " in out


def test_eval_mu_truncated_input_matches_agm_oracle(capsys):
    # 17-digit json output; the text channel carries only 12 digits
    code, out, _ = run_cli(capsys, "eval", "mu", "--a", "0.5", "--c", "1",
                           "--r", "0.70710678", "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(
        1.570796329203778141213892, rel=1e-13)


def test_eval_mu_symmetry_point(capsys):
    code, out, _ = run_cli(capsys, "eval", "mu", "--a", "0.5", "--c", "1",
                           "--r", "0.7071067811865476")
    assert code == 0
    first = out.splitlines()[0]
    assert first.startswith("1.570796326")
    assert float(first) == pytest.approx(math.pi / 2.0, rel=1e-11)


def test_eval_k_truncated_input_matches_agm_oracle(capsys):
    code, out, _ = run_cli(capsys, "eval", "K", "--a", "0.5", "--b", "0.5",
                           "--c", "1", "--r", "0.70710678", "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(
        1.854074675879721592826416, rel=1e-13)


def test_eval_k_symmetry_point(capsys):
    code, out, _ = run_cli(capsys, "eval", "K", "--a", "0.5", "--b", "0.5",
                           "--c", "1", "--r", "0.7071067811865476")
    assert code == 0
    assert out.splitlines()[0].startswith("1.8540746773")


def test_eval_json_format(capsys):
    code, out, _ = run_cli(capsys, "eval", "beta", "--a", "0.5", "--b", "0.5",
                           "--format", "json")
    assert code == 0
    body = json.loads(out)
    assert body["fn"] == "beta"
    assert body["value"] == pytest.approx(math.pi, rel=1e-13)
    assert body["method"]


def test_eval_domain_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "eval", "K", "--a", "0.5", "--b", "0.9",
                           "--c", "0.7", "--r", "0.5")
    assert code == 2
    assert "domain error" in err


def test_eval_missing_flag_exit_2(capsys):
    code, _, err = run_cli(capsys, "eval", "mu", "--a", "0.5", "--c", "1")
    assert code == 2
    assert "--r" in err


def test_eval_convergence_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("GENELLIP_MAX_ITERS", "3")
    code, _, err = run_cli(capsys, "invert", "--a", "0.5", "--c", "1",
                           "--p", "1.2")
    assert code == 3
    assert "convergence" in err


# --------------------------------------------------------------------------
# tabulate

def test_tabulate_mu_nine_rows(capsys):
    code, out, _ = run_cli(capsys, "tabulate", "mu", "--a", "0.5", "--c", "1",
                           "--grid", "0.1:0.9:9:linear")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("# mu,")
    rows = [l for l in lines if not l.startswith("#")]
    assert len(rows) == 9
    assert all(len(r.split(",")) == 3 for r in rows)


def test_tabulate_m_symmetric_column(capsys):
    code, out, _ = run_cli(capsys, "tabulate", "M", "--a", "0.3", "--b", "0.5",
                           "--c", "0.9", "--grid", "0.1:0.9:9:linear")
    assert code == 0
    vals = [float(l.split(",")[1]) for l in out.strip().splitlines()
            if not l.startswith("#")]
    for lo, hi in zip(vals, reversed(vals)):
        assert lo == pytest.approx(hi, rel=1e-11)


def test_tabulate_phi_strictly_increasing(capsys):
    code, out, _ = run_cli(capsys, "tabulate", "phi", "--a", "0.5", "--c", "1",
                           "--K", "2", "--grid", "0.05:0.95:12:linear")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1].startswith("# K,2")
    vals = [float(l.split(",")[1]) for l in lines if not l.startswith("#")]
    assert all(x < y for x, y in zip(vals, vals[1:]))


def test_tabulate_deterministic(capsys):
    args = ("tabulate", "K", "--a", "0.3", "--b", "0.5", "--c", "0.7",
            "--grid", "0.001:0.999:17:logit")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_tabulate_bad_grid_exit_2(capsys):
    code, _, err = run_cli(capsys, "tabulate", "mu", "--a", "0.5", "--c", "1",
                           "--grid", "0.1:0.9:banana")
    assert code == 2


def test_tabulate_out_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, _, _ = run_cli(capsys, "tabulate", "gamma",
                         "--grid", "1:5:5:linear", "--out", str(target))
    assert code == 0
    lines = target.read_text().strip().splitlines()
    assert lines[0] == "# gamma,,,"
    assert len(lines) == 6
    assert float(lines[-1].split(",")[1]) == pytest.approx(24.0, rel=1e-12)


# --------------------------------------------------------------------------
# invert / phi / solve

def test_invert_round_trip(capsys):
    code, out, _ = run_cli(capsys, "invert", "--a", "0.5", "--c", "1",
                           "--p", str(math.pi / 2.0))
    assert code == 0
    assert float(out.splitlines()[0]) == pytest.approx(math.sqrt(0.5),
                                                       rel=1e-10)
    assert "method = solver" in out


def test_phi_verb_frozen(capsys):
    code, out, _ = run_cli(capsys, "phi", "--a", "0.5", "--c", "1",
                           "--K", "2", "--r", "0.5")
    assert code == 0
    assert float(out.splitlines()[0]) == pytest.approx(
        0.9428090415820633658677925, rel=1e-10)


def test_solve_reports_residual(capsys):
    code, out, _ = run_cli(capsys, "solve", "--a", "0.25", "--c", "1",
                           "--p", "3", "--r", "0.6")
    assert code == 0
    assert float(out.splitlines()[0]) == pytest.approx(
        0.005052235666512477599151527, rel=1e-9)
    res = [l for l in out.splitlines() if l.startswith("residual = ")]
    assert res and abs(float(res[0].split("=")[1])) < 1e-10


# --------------------------------------------------------------------------
# verify

def test_verify_single_check_report(tmp_path, capsys):
    out_path = tmp_path / "rep.json"
    code, out, _ = run_cli(capsys, "verify", "mutheorem-1",
                           "--out", str(out_path))
    assert code == 0
    rep = json.loads(out_path.read_text())
    assert set(rep) == {"run_id", "timestamp", "checks"}
    assert len(rep["checks"]) == 1
    entry = rep["checks"][0]
    assert set(entry) == {"id", "claim", "verdict", "worst_margin",
                          "witness", "samples", "seconds"}
    assert entry["id"] == "mutheorem-1"
    assert entry["verdict"] == "pass"


def test_verify_run_id_stable(tmp_path, capsys):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    run_cli(capsys, "verify", "hyper-1", "--out", str(p1))
    run_cli(capsys, "verify", "hyper-1", "--out", str(p2))
    r1, r2 = json.loads(p1.read_text()), json.loads(p2.read_text())
    assert r1["run_id"] == r2["run_id"]
    c1, c2 = r1["checks"][0], r2["checks"][0]
    assert (c1["verdict"], c1["worst_margin"], c1["samples"]) == \
        (c2["verdict"], c2["worst_margin"], c2["samples"])


def test_verify_unknown_id_exit_4(capsys):
    code, _, err = run_cli(capsys, "verify", "not-a-check")
    assert code == 4
    assert "unknown check id" in err


def test_verify_conjectures_non_gating_exit_0(capsys):
    code, out, _ = run_cli(capsys, "verify", "conjectures", "--non-gating")
    assert code == 0
    assert "[non-gating]" in out


def test_verify_gating_failure_exit_1(capsys, monkeypatch):
    # exit-code mapping for a failing gating check, via an injected spec
    from genellip import modulus_params_ac, mu
    p = modulus_params_ac(0.5, 1.0)
    bad = CheckSpec(
        id="t-bad", kind="monotone", direction=1,
        claim="inverted on purpose",
        param_grid=GridSpec((GridDim("a", 0.0, 0.0, 1, "linear",
                                     values=(0.5,)),)),
        arg_grid=GridSpec((GridDim("r", 0.05, 0.95, 9, "linear"),)),
        tolerance=1e-9,
        fn=lambda d, r: (lambda e: (e.value, e.abs_err_est))(mu(p, r)))
    monkeypatch.setattr(cli, "select", lambda which: [bad])
    code, out, _ = run_cli(capsys, "verify", "t-bad")
    assert code == 1
    assert "fail" in out
    # and --non-gating downgrades the same run to exit 0
    code2, _, _ = run_cli(capsys, "verify", "t-bad", "--non-gating")
    assert code2 == 0


def test_verify_tol_override_applies(capsys, monkeypatch):
    seen = {}
    real = cli.run_check

    def spy(spec):
        seen["tol"] = spec.tolerance
        return real(spec)

    monkeypatch.setattr(cli, "run_check", spy)
    run_cli(capsys, "verify", "hyper-1", "--tol", "1e-6")
    assert seen["tol"] == 1e-6


# --------------------------------------------------------------------------
# list-checks and the module entry point

def test_list_checks_matches_registry(capsys):
    code, out, _ = run_cli(capsys, "list-checks")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == len(registry())
    assert lines[0].split()[0] in registry()


def test_list_checks_json(capsys):
    code, out, _ = run_cli(capsys, "list-checks", "--format", "json")
    body = json.loads(out)
    assert len(body) == len(registry())
    assert {"id", "kind", "gating", "claim"} <= set(body[0])


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "genellip.cli", "eval", "R",
         "--a", "0.5", "--b", "0.5"],
        capture_output=True, text=True)
    assert r.returncode == 0
    assert float(r.stdout.splitlines()[0]) == pytest.approx(
        math.log(16.0), rel=1e-12)
