"""Command-line front end: catalog listing, check suites over parameter
grids, and flow runs with oracle summaries.

Machine output is JSON-lines: a header record carries the timestamp,
toolkit version and config digest; every following record is a pure
function of the config, so re-runs are byte-identical below the header.
Exit codes: 0 all checks satisfied, 1 a check failed (or the flow became
singular), 2 malformed configuration.

``STATICGEO_THREADS`` caps the number of worker threads used for grid
sweeps (default 1); records are written in deterministic grid order
regardless of scheduling.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from . import __version__
from . import conformal, flow, metrics, quantities, stability
from .errors import SingularFlowError, StaticGeoError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_CONFIG = 2

AUTO_RADII_FACTORS = (1.05, 1.5, 2.2, 3.5, 6.0)


@dataclass
class SuiteConfig:
    """Grid and check selection for ``staticgeo check``."""

    metric: str = "schwarzschild"
    n: list = field(default_factory=lambda: [3])
    m: list = field(default_factory=lambda: [1.0])
    r: list = field(default_factory=list)  # empty -> auto ladder per (n, m)
    checks: list = field(default_factory=list)
    tol: float = 1e-9
    tolerances: dict = field(default_factory=dict)
    out: str = "-"
    seed: int = 0

    def digest(self) -> str:
        blob = json.dumps(
            {
                "metric": self.metric,
                "n": self.n,
                "m": self.m,
                "r": self.r,
                "checks": self.checks,
                "tol": self.tol,
                "tolerances": self.tolerances,
                "seed": self.seed,
            },
            sort_keys=True,
        )
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _check_minkowski(g, r, tol):
    m = metrics.adm_mass(g, r)
    return quantities.minkowski_check(g, r, m, tol)


def _check_mass_flip(g, r, tol):
    return conformal.mass_flip_check(conformal.conformal_flip(g), r_eval=r, tol=tol)


def _check_vh(g, r, tol):
    return conformal.vh_identity_check(conformal.conformal_flip(g), r, tol)


def _check_static_residual(g, r, tol):
    res = metrics.static_residual(g, r)
    worst = max(abs(float(x)) for x in res)
    from .report import make_report

    return make_report("static-residual", worst, 0.0, -worst, tol)


def _check_eigenvalue_bound(g, r, tol):
    s = quantities.sphere_geometry(g, r)
    return stability.eigenvalue_bound_check(g.n, s.r0, s.H, 0.0, tol)


def _check_hawking_q(g, r, tol):
    return quantities.hawking_q_check(g, r, tol)


CHECKS = {
    "minkowski": _check_minkowski,
    "levelset-minkowski": lambda g, r, tol: quantities.levelset_minkowski_check(g, r, tol),
    "willmore": lambda g, r, tol: quantities.willmore_check(g, r, tol),
    "conformal-minkowski": lambda g, r, tol: conformal.conformal_minkowski_check(g, r, tol),
    "bartnik-identity": lambda g, r, tol: quantities.bartnik_mass_identity_check(g, r, tol),
    "mass-flip": _check_mass_flip,
    "vh-identity": _check_vh,
    "static-residual": _check_static_residual,
    "eigenvalue-bound": _check_eigenvalue_bound,
    "hawking-q": _check_hawking_q,
}

DEFAULT_CHECKS = [
    "static-residual",
    "minkowski",
    "levelset-minkowski",
    "willmore",
    "conformal-minkowski",
    "bartnik-identity",
    "mass-flip",
    "vh-identity",
]


def _validate_config(cfg: SuiteConfig) -> None:
    known = ("schwarzschild", "schwarzschild-isotropic", "flat")
    if cfg.metric not in known and not cfg.metric.startswith("file:"):
        raise ValueError(f"unknown metric '{cfg.metric}'")
    if not cfg.n:
        raise ValueError("config needs a non-empty 'n' list")
    if not cfg.m:
        raise ValueError("config needs a non-empty 'm' list")
    if not cfg.checks:
        raise ValueError("config needs a non-empty 'checks' list")
    for name in cfg.checks:
        if name not in CHECKS:
            raise ValueError(f"unknown check '{name}' (known: {sorted(CHECKS)})")
    if cfg.tol <= 0.0:
        raise ValueError("tol must be positive")
    for name, t in cfg.tolerances.items():
        if name not in CHECKS:
            raise ValueError(f"tolerance given for unknown check '{name}'")
        if t <= 0.0:
            raise ValueError("tolerances must be positive")
    for n in cfg.n:
        if not (metrics.DIM_MIN <= int(n) <= metrics.DIM_MAX):
            raise ValueError(f"dimension {n} outside [3, 7]")


def _auto_radii(g):
    from staticgeo.radial import TabulatedRadialFn

    hi = None
    for fn in (g.a, g.b, g.V):
        if isinstance(fn, TabulatedRadialFn):
            hi = fn.r_hi if hi is None else min(hi, fn.r_hi)
    if hi is None:
        return [c * max(g.r_min, 1.0) for c in AUTO_RADII_FACTORS]
    lo = g.r_min + 0.02 * (hi - g.r_min)
    return list(np.geomspace(lo, 0.95 * hi, len(AUTO_RADII_FACTORS)))


def _grid_points(cfg: SuiteConfig):
    """Deterministic (n, m, r) grid; 'auto' radii scale with the horizon.

    A 'file:' metric carries its own dimension and mass, so the n and m
    lists collapse to a single grid row for it.
    """
    pts = []
    if cfg.metric.startswith("file:"):
        try:
            g = metrics.load_metric(cfg.metric)
        except (StaticGeoError, OSError, json.JSONDecodeError) as exc:
            return [(None, None, None, None, str(exc))]
        for r in (cfg.r or _auto_radii(g)):
            pts.append((g.n, None, float(r), g, None))
        return pts
    for n in cfg.n:
        ms = cfg.m if cfg.metric != "flat" else [0.0]
        for m in ms:
            try:
                g = metrics.load_metric(cfg.metric, n=int(n), m=float(m))
            except StaticGeoError as exc:
                pts.append((int(n), float(m), None, None, str(exc)))
                continue
            for r in (cfg.r or _auto_radii(g)):
                pts.append((int(n), float(m), float(r), g, None))
    return pts


def _run_point(point, cfg: SuiteConfig):
    n, m, r, g, err = point
    records = []
    if err is not None:
        records.append({"type": "skip", "n": n, "m": m, "r": r, "reason": err})
        return records
    for name in cfg.checks:
        tol = cfg.tolerances.get(name, cfg.tol)
        if r <= g.r_min:
            records.append(
                {"type": "skip", "n": n, "m": m, "r": r, "check": name,
                 "reason": "radius inside inner boundary"}
            )
            continue
        if name == "hawking-q" and n != 3:
            records.append(
                {"type": "skip", "n": n, "m": m, "r": r, "check": name,
                 "reason": "defined only for n = 3"}
            )
            continue
        rep = CHECKS[name](g, r, tol)
        rec = {"type": "report", "n": n, "m": m, "r": r, "check": name}
        rec.update(rep.to_dict())
        records.append(rec)
    return records


def _max_workers() -> int:
    raw = os.environ.get("STATICGEO_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit(lines, out_path: str):
    text = "\n".join(lines) + "\n"
    if out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _write_csv(records, path: str):
    rows = [rec for rec in records if rec.get("type") == "report"]
    cols = ["n", "m", "r", "check", "name", "lhs", "rhs", "slack",
            "satisfied", "tol"]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(cols)
        for rec in rows:
            writer.writerow([rec.get(c) for c in cols])


def cmd_catalog(args) -> int:
    for label, schema in metrics.catalog().items():
        print(f"{label:28s} {schema}")
    return EXIT_OK


def _config_from_args(args) -> SuiteConfig:
    cfg = SuiteConfig()
    if args.config:
        with open(args.config) as fh:
            doc = json.load(fh)
        unknown = set(doc) - {
            "metric", "n", "m", "r", "checks", "tol", "tolerances", "out",
            "seed",
        }
        if unknown:
            raise ValueError(f"unknown config keys {sorted(unknown)}")
        for key, val in doc.items():
            setattr(cfg, key, val)
    if args.metric is not None:
        cfg.metric = args.metric
    if args.n:
        cfg.n = args.n
    if args.m:
        cfg.m = args.m
    if args.r:
        cfg.r = args.r
    if args.checks:
        cfg.checks = args.checks
    if args.tol is not None:
        cfg.tol = args.tol
    if args.out is not None:
        cfg.out = args.out
    if args.seed is not None:
        cfg.seed = args.seed
    if not cfg.checks and not args.config:
        cfg.checks = list(DEFAULT_CHECKS)
    return cfg


def cmd_check(args) -> int:
    try:
        cfg = _config_from_args(args)
        _validate_config(cfg)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG

    points = _grid_points(cfg)
    workers = _max_workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda p: _run_point(p, cfg), points))
    else:
        results = [_run_point(p, cfg) for p in points]

    records = [rec for group in results for rec in group]
    reports = [r for r in records if r["type"] == "report"]
    passed = sum(1 for r in reports if r["satisfied"])
    failed = len(reports) - passed
    skipped = sum(1 for r in records if r["type"] == "skip")

    header = {
        "type": "header",
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "version": __version__,
        "config_digest": cfg.digest(),
    }
    summary = {
        "type": "summary",
        "reports": len(reports),
        "passed": passed,
        "failed": failed,
        "skipped": skipped,
    }
    lines = [json.dumps(header)]
    lines += [json.dumps(rec) for rec in records]
    lines.append(json.dumps(summary))
    _emit(lines, cfg.out)
    if args.plot_data:
        _write_csv(records, args.plot_data)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _flow_records(traj):
    if isinstance(traj, flow.RadialTrajectory):
        return list(traj.records())
    return [s.record() for s in traj.states]


def cmd_flow(args) -> int:
    out = args.out or "-"
    header = {
        "type": "header",
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "version": __version__,
        "mode": args.flow_mode,
    }
    try:
        cfg = flow.FlowConfig(
            rel_tol=args.rel_tol,
            abs_tol=args.abs_tol,
            t_max=args.t_max,
            N=args.nodes,
        )
        if args.flow_mode == "ode":
            traj = flow.imcf_ode_solve(args.n, args.r0, args.H0, cfg)
            dev = 0.0
            for s in traj.states:
                oracle = flow.imcf_ode_closed_form(args.n, args.r0, args.H0, s.t)
                dev = max(dev, abs(s.u - oracle.u) / oracle.u)
            summary = {
                "type": "summary",
                "states": len(traj.states),
                "oracle_max_rel_err": dev,
                "area_growth_slack": flow.area_growth_check(traj).slack,
            }
        else:
            grid = flow.pde_grid(cfg.N)
            if args.u0_legendre:
                coeffs = {}
                for part in args.u0_legendre.split(","):
                    l, eps = part.split(":")
                    coeffs[int(l)] = float(eps)
                from numpy.polynomial.legendre import legval

                c = np.zeros(max(coeffs) + 1)
                for l, eps in coeffs.items():
                    c[l] = eps
                u0 = args.u0_const * (1.0 + legval(np.cos(grid), c))
            else:
                u0 = np.full(grid.size, args.u0_const)
            traj = flow.imcf_pde_solve(args.n, args.r0, u0, cfg,
                                       rbar0=args.rbar0)
            last = traj.states[-1]
            spread = float(np.max(last.u) - np.min(last.u))
            summary = {
                "type": "summary",
                "states": len(traj.states),
                "final_spread": spread,
                "area_growth_slack": flow.area_growth_check(traj).slack,
            }
            if spread <= 1e-9 * float(np.mean(last.u)):
                rad = flow.radialize(traj)
                dev = 0.0
                for s in rad.states:
                    oracle = flow.imcf_ode_closed_form(
                        args.n, args.r0, rad.H0, s.t
                    )
                    dev = max(dev, abs(s.u - oracle.u) / oracle.u)
                summary["oracle_max_rel_err"] = dev
    except SingularFlowError as exc:
        lines = [json.dumps(header),
                 json.dumps({"type": "error", "error": "singular-flow",
                             "t": exc.t})]
        _emit(lines, out)
        print(f"singular flow: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except StaticGeoError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG

    records = _flow_records(traj)
    lines = [json.dumps(header)]
    lines += [json.dumps(rec) for rec in records]
    lines.append(json.dumps(summary))
    _emit(lines, out)
    if args.plot_data:
        cols = ["t", "r", "area"]
        with open(args.plot_data, "w", newline="") as fh:
            writer = csv.writer(fh)
            if args.flow_mode == "ode":
                writer.writerow(cols + ["u"])
                for rec in records:
                    writer.writerow([rec["t"], rec["r"], rec["area"], rec["u"]])
            else:
                writer.writerow(cols + ["u_mean", "u_min", "u_max"])
                for rec in records:
                    u = rec["u"]
                    writer.writerow(
                        [rec["t"], rec["r"], rec["area"],
                         float(np.mean(u)), float(np.min(u)), float(np.max(u))]
                    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="staticgeo",
        description="Checks and flows on rotationally symmetric static metrics",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list available metrics")

    chk = sub.add_parser("check", help="run a check suite over a grid")
    chk.add_argument("--config", help="JSON config file (SuiteConfig fields)")
    chk.add_argument("--metric", default=None)
    chk.add_argument("--n", type=int, action="append", default=[],
                     help="ambient dimension (repeatable)")
    chk.add_argument("--m", type=float, action="append", default=[],
                     help="mass parameter (repeatable)")
    chk.add_argument("--r", type=float, action="append", default=[],
                     help="coordinate radius (repeatable; default: auto ladder)")
    chk.add_argument("--checks", nargs="+", default=[],
                     choices=sorted(CHECKS), metavar="CHECK")
    chk.add_argument("--tol", type=float, default=None)
    chk.add_argument("--out", default=None, help="JSON-lines path or '-'")
    chk.add_argument("--plot-data", default=None, help="also write CSV here")
    chk.add_argument("--seed", type=int, default=None)

    flw = sub.add_parser("flow", help="run a flow and compare with the oracle")
    flw.add_argument("flow_mode", choices=["ode", "pde"])
    flw.add_argument("--n", type=int, default=3)
    flw.add_argument("--r0", type=float, default=4.0)
    flw.add_argument("--H0", type=float, default=0.3535533906,
                     help="initial mean curvature (ode)")
    flw.add_argument("--u0-const", type=float, default=None,
                     help="constant initial flow speed (pde); default 1/H0")
    flw.add_argument("--u0-legendre", default=None,
                     help="pde perturbation 'l:eps[,l:eps...]' on top of u0-const")
    flw.add_argument("--rbar0", type=float, default=0.0,
                     help="constant ambient scalar curvature (pde)")
    flw.add_argument("--t-max", type=float, default=10.0)
    flw.add_argument("--nodes", type=int, default=128,
                     help="pde grid subintervals")
    flw.add_argument("--rel-tol", type=float, default=1e-10)
    flw.add_argument("--abs-tol", type=float, default=1e-12)
    flw.add_argument("--out", default=None)
    flw.add_argument("--plot-data", default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "catalog":
        return cmd_catalog(args)
    if args.command == "check":
        return cmd_check(args)
    if args.command == "flow":
        if args.flow_mode == "pde" and args.u0_const is None:
            args.u0_const = 1.0 / args.H0
        return cmd_flow(args)
    return EXIT_BAD_CONFIG


if __name__ == "__main__":
    sys.exit(main())
