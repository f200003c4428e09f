import json

from staticgeo import cli


def run_cli(argv):
    return cli.main(argv)


def read_jsonl(path):
    return [json.loads(line) for line in path.read_text().splitlines()]


def test_catalog_lists_metrics(capsys):
    assert run_cli(["catalog"]) == 0
    out = capsys.readouterr().out
    for label in ("schwarzschild", "schwarzschild-isotropic", "flat"):
        assert label in out


def test_full_equality_suite_passes(tmp_path):
    out = tmp_path / "suite.jsonl"
    argv = ["check"]
    for n in (3, 4, 5, 6, 7):
        argv += ["--n", str(n)]
    for m in (-0.5, 0.0, 1.0, 2.0):
        argv += ["--m", str(m)]
    argv += ["--out", str(out)]
    assert run_cli(argv) == 0
    records = read_jsonl(out)
    assert records[0]["type"] == "header"
    summary = records[-1]
    assert summary["type"] == "summary"
    assert summary["failed"] == 0
    assert summary["reports"] == summary["passed"] > 0


def test_unachievable_tolerance_fails(tmp_path):
    out = tmp_path / "tight.jsonl"
    code = run_cli(
        ["check", "--n", "3", "--n", "5", "--m", "1", "--m", "2",
         "--tol", "1e-16", "--out", str(out)]
    )
    assert code == 1
    summary = read_jsonl(out)[-1]
    assert summary["failed"] > 0


def test_malformed_configs(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n": [3], "m": [1.0]}))  # no checks
    assert run_cli(["check", "--config", str(cfg), "--out", "-"]) == 2

    cfg.write_text(json.dumps({"n": [], "m": [1.0], "checks": ["minkowski"]}))
    assert run_cli(["check", "--config", str(cfg)]) == 2

    cfg.write_text(json.dumps({"n": [3], "m": [1.0], "checks": ["bogus"]}))
    assert run_cli(["check", "--config", str(cfg)]) == 2

    cfg.write_text(json.dumps({"n": [3], "m": [1.0], "checks": ["minkowski"],
                               "tol": -1.0}))
    assert run_cli(["check", "--config", str(cfg)]) == 2

    cfg.write_text(json.dumps({"n": [9], "m": [1.0], "checks": ["minkowski"]}))
    assert run_cli(["check", "--config", str(cfg)]) == 2

    cfg.write_text("{ not json")
    assert run_cli(["check", "--config", str(cfg)]) == 2


def test_config_file_suite(tmp_path):
    cfg = tmp_path / "cfg.json"
    out = tmp_path / "out.jsonl"
    cfg.write_text(json.dumps({
        "metric": "schwarzschild",
        "n": [3],
        "m": [1.0],
        "r": [4.0],
        "checks": ["minkowski", "hawking-q", "eigenvalue-bound"],
        "tol": 1e-9,
        "out": str(out),
    }))
    assert run_cli(["check", "--config", str(cfg)]) == 0
    recs = read_jsonl(out)
    checks = [r["check"] for r in recs if r["type"] == "report"]
    assert checks == ["minkowski", "hawking-q", "eigenvalue-bound"]


def test_hawking_q_skipped_outside_n3(tmp_path):
    out = tmp_path / "skip.jsonl"
    code = run_cli(["check", "--n", "4", "--m", "1", "--r", "3.0",
                    "--checks", "hawking-q", "--out", str(out)])
    assert code == 0
    recs = read_jsonl(out)
    skips = [r for r in recs if r["type"] == "skip"]
    assert skips and all("n = 3" in s["reason"] for s in skips)


def test_radius_inside_horizon_skipped(tmp_path):
    out = tmp_path / "inside.jsonl"
    code = run_cli(["check", "--n", "3", "--m", "2.0", "--r", "1.0",
                    "--checks", "minkowski", "--out", str(out)])
    assert code == 0
    recs = read_jsonl(out)
    assert any(r["type"] == "skip" for r in recs)


def test_determinism_below_header(tmp_path, monkeypatch):
    args = ["check", "--n", "3", "--n", "4", "--m", "1", "--m", "0"]
    out1, out2, out3 = (tmp_path / f"run{i}.jsonl" for i in (1, 2, 3))
    assert run_cli(args + ["--out", str(out1)]) == 0
    assert run_cli(args + ["--out", str(out2)]) == 0
    monkeypatch.setenv("STATICGEO_THREADS", "4")
    assert run_cli(args + ["--out", str(out3)]) == 0
    body1 = out1.read_text().splitlines()[1:]
    body2 = out2.read_text().splitlines()[1:]
    body3 = out3.read_text().splitlines()[1:]
    assert body1 == body2 == body3


def test_csv_plot_data(tmp_path):
    out = tmp_path / "r.jsonl"
    csv_path = tmp_path / "r.csv"
    assert run_cli(["check", "--n", "3", "--m", "1", "--r", "4.0",
                    "--checks", "minkowski", "--out", str(out),
                    "--plot-data", str(csv_path)]) == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0].startswith("n,m,r,check")
    assert len(lines) == 2


def test_file_metric_suite(tmp_path):
    import numpy as np

    from staticgeo import metrics

    g = metrics.schwarzschild(3, 1.0)
    rs = np.geomspace(2.4, 80.0, 600)
    path = tmp_path / "table.json"
    path.write_text(json.dumps({
        "n": 3, "r": rs.tolist(), "a": g.a(rs).tolist(),
        "b": g.b(rs).tolist(), "V": g.V(rs).tolist(),
    }))
    out = tmp_path / "file.jsonl"
    code = run_cli(["check", "--metric", f"file:{path}",
                    "--checks", "minkowski", "vh-identity",
                    "--tol", "1e-5", "--out", str(out)])
    assert code == 0
    recs = read_jsonl(out)
    reports = [r for r in recs if r["type"] == "report"]
    assert reports and all(r["satisfied"] for r in reports)

    code = run_cli(["check", "--metric", "file:/nonexistent.json",
                    "--checks", "minkowski", "--out", str(out)])
    assert code == 0  # skip records, nothing failed
    assert any(r["type"] == "skip" for r in read_jsonl(out))


def test_flow_ode_summary(tmp_path):
    out = tmp_path / "ode.jsonl"
    code = run_cli(["flow", "ode", "--n", "3", "--r0", "4",
                    "--H0", "0.35355339", "--t-max", "10", "--out", str(out)])
    assert code == 0
    recs = read_jsonl(out)
    assert recs[-1]["type"] == "summary"
    assert recs[-1]["oracle_max_rel_err"] <= 1e-8
    body = [r for r in recs if r.get("type") is None]
    assert body and set(body[0]) == {"t", "r", "u", "area"}


def test_flow_ode_singular_exit(tmp_path):
    out = tmp_path / "sing.jsonl"
    code = run_cli(["flow", "ode", "--H0", "1e9", "--out", str(out)])
    assert code == 1
    recs = read_jsonl(out)
    assert recs[-1]["type"] == "error" and recs[-1]["error"] == "singular-flow"


def test_flow_pde_matches_ode(tmp_path):
    out = tmp_path / "pde.jsonl"
    code = run_cli(["flow", "pde", "--n", "3", "--r0", "4",
                    "--H0", "0.3535533906", "--t-max", "1", "--nodes", "64",
                    "--out", str(out)])
    assert code == 0
    summary = read_jsonl(out)[-1]
    assert summary["oracle_max_rel_err"] <= 1e-7
    assert summary["final_spread"] <= 1e-9


def test_flow_pde_perturbed_and_csv(tmp_path):
    out = tmp_path / "pde2.jsonl"
    csv_path = tmp_path / "pde2.csv"
    code = run_cli(["flow", "pde", "--n", "3", "--r0", "4",
                    "--H0", "0.3535533906", "--u0-legendre", "2:0.01",
                    "--t-max", "0.5", "--nodes", "64",
                    "--out", str(out), "--plot-data", str(csv_path)])
    assert code == 0
    summary = read_jsonl(out)[-1]
    assert "oracle_max_rel_err" not in summary
    assert summary["final_spread"] > 0.0
    header = csv_path.read_text().splitlines()[0]
    assert header == "t,r,area,u_mean,u_min,u_max"
