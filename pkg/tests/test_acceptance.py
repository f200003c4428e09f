"""Acceptance suite: the ten exit criteria, each printed as PASS/FAIL.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
All tolerances are pinned here; the expected values come from closed-form
oracles and internal identities, never from the code paths under test.
"""

import math

import numpy as np
from numpy.polynomial.legendre import legval

from staticgeo import (
    conformal,
    flow,
    metrics,
    quantities,
    stability,
    surfaces,
)

from helpers import equality_radii, schwarzschild_grid

H0_M1_R4 = 0.3535533906


def _criterion(name: str, ok: bool, detail: str = ""):
    print(f"[acceptance] {name}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, f"{name}: {detail}"


def test_criterion_01_static_residuals():
    worst = 0.0
    for n, m, g in schwarzschild_grid():
        for r in metrics.radius_ladder(g, 20):
            res = metrics.static_residual(g, r)
            worst = max(worst, max(abs(float(x)) for x in res))
    _criterion("1 static residuals <= 1e-8", worst <= 1e-8, f"worst={worst:.3e}")


def test_criterion_02_minkowski_equalities():
    worst = 0.0
    for n, m, g in schwarzschild_grid():
        for r in equality_radii(g):
            mass = metrics.adm_mass(g, r)
            for rep in (
                quantities.minkowski_check(g, r, mass),
                quantities.levelset_minkowski_check(g, r),
                quantities.willmore_check(g, r),
                conformal.conformal_minkowski_check(g, r),
            ):
                worst = max(worst, abs(rep.slack))
    _criterion("2 Minkowski equalities |slack| <= 1e-10", worst <= 1e-10,
               f"worst={worst:.3e}")


def test_criterion_03_mass_identities():
    worst_flux = 0.0
    worst_flip = 0.0
    worst_bartnik = 0.0
    for n, m, g in schwarzschild_grid():
        radii = equality_radii(g)
        masses = [metrics.adm_mass(g, r) for r in radii]
        spread = max(masses) - min(masses)
        worst_flux = max(worst_flux, spread / max(1.0, abs(m)))
        pair = conformal.conformal_flip(g)
        for r in radii:
            worst_flip = max(worst_flip, abs(conformal.mass_flip_check(pair, r_eval=r).slack))
            worst_bartnik = max(worst_bartnik,
                                abs(quantities.bartnik_mass_identity_check(g, r).slack))
    # photon-sphere point of the unit-mass 3-metric
    s = quantities.sphere_geometry(metrics.schwarzschild(3, 1.0), 3.0)
    photon_ok = (
        abs(s.V0 - 0.5773502692) <= 1e-9
        and abs(s.dV_dnu - 0.1111111111) <= 1e-9
        and abs(s.m0 - 1.0) <= 1e-9
        and abs(quantities.bartnik_mass_identity_check(
            metrics.schwarzschild(3, 1.0), 3.0).slack) <= 1e-10
    )
    ok = worst_flux <= 1e-9 and worst_flip <= 1e-9 and worst_bartnik <= 1e-10 and photon_ok
    _criterion(
        "3 mass identities (flux 1e-9, flip 1e-9, boundary-data 1e-10)", ok,
        f"flux={worst_flux:.2e} flip={worst_flip:.2e} bartnik={worst_bartnik:.2e}",
    )


def test_criterion_04_ode_vs_closed_form():
    worst = 0.0
    worst_rec = 0.0
    for n in (3, 4, 5, 6, 7):
        for r0, H0 in ((4.0, H0_M1_R4), (1.0, float(n - 1)), (2.0, 0.3 * (n - 1))):
            if quantities.m0_of(n, r0, H0) < 0.0:
                continue
            traj = flow.imcf_ode_solve(n, r0, H0)
            for s in traj.states:
                oracle = flow.imcf_ode_closed_form(n, r0, H0, s.t)
                worst = max(worst, abs(s.u - oracle.u) / oracle.u)
            _, rep = flow.flow_to_metric(traj)
            worst_rec = max(worst_rec, rep.lhs)
    ok = worst <= 1e-8 and worst_rec <= 1e-7
    _criterion("4 IMCF ODE oracle (1e-8) and metric reconstruction (1e-7)", ok,
               f"ode={worst:.2e} rec={worst_rec:.2e}")


def test_criterion_05_pde():
    cfg = flow.FlowConfig(t_max=1.0, N=128)
    u0 = np.full(129, 1.0 / H0_M1_R4)
    traj = flow.imcf_pde_solve(3, 4.0, u0, cfg)
    last = traj.states[-1]
    oracle = flow.imcf_ode_closed_form(3, 4.0, H0_M1_R4, last.t)
    const_dev = float(np.max(np.abs(last.u - oracle.u)) / oracle.u)

    final = {}
    for N in (128, 256, 512):
        th = flow.pde_grid(N)
        u0p = (1.0 / H0_M1_R4) * (1.0 + 0.01 * legval(np.cos(th), [0, 0, 1]))
        tr = flow.imcf_pde_solve(3, 4.0, u0p, flow.FlowConfig(t_max=0.5, N=N),
                                 n_save=2)
        final[N] = tr.states[-1].u
    d1 = float(np.max(np.abs(final[128] - final[256][::2])))
    d2 = float(np.max(np.abs(final[256] - final[512][::2])))
    ratio = d1 / d2
    ok = const_dev <= 1e-7 and 3.5 <= ratio <= 4.5
    _criterion("5 PDE constant-data match (1e-7) + 2nd-order ratio [3.5,4.5]",
               ok, f"dev={const_dev:.2e} ratio={ratio:.3f}")


def test_criterion_06_flow_asymptotics():
    worst_area = 0.0
    worst_h = 0.0
    for n, r0, H0 in ((3, 4.0, H0_M1_R4), (4, 2.0, 0.9), (7, 3.0, 0.5)):
        traj = flow.imcf_ode_solve(n, r0, H0, flow.FlowConfig(t_max=20.0))
        areas = traj.areas()
        ts = np.array([s.t for s in traj.states])
        worst_area = max(worst_area,
                         float(np.max(np.abs(areas / (areas[0] * np.exp(ts)) - 1.0))))
        s = traj.states[-1]
        worst_h = max(worst_h, abs(math.exp(s.t / (n - 1)) / s.u - (n - 1) / r0))
    ok = worst_area <= 1e-12 and worst_h <= 1e-4
    _criterion("6 area law e^t (1e-12 rel) + rescaled H at t=20 (1e-4)", ok,
               f"area={worst_area:.2e} H={worst_h:.2e}")


def test_criterion_07_conformal():
    worst_inv = 0.0
    worst_match = 0.0
    worst_vh = 0.0
    for n in (3, 4, 5, 6, 7):
        g = metrics.schwarzschild(n, 1.0)
        gneg = metrics.schwarzschild(n, -1.0)
        pair = conformal.conformal_flip(g)
        back = conformal.conformal_flip(pair.flipped).flipped
        rs = np.geomspace(1.1 * g.r_min, 100.0, 50)
        for fn, fn2 in ((g.a, back.a), (g.b, back.b), (g.V, back.V)):
            scale = max(1.0, float(np.max(np.abs(fn(rs)))))
            worst_inv = max(worst_inv, float(np.max(np.abs(fn(rs) - fn2(rs)))) / scale)
        for r in np.geomspace(1.1 * g.r_min, 50.0, 8):
            s = quantities.sphere_geometry(pair.flipped, r)
            worst_match = max(
                worst_match,
                abs(s.V0 - gneg.V(s.r0)),
                abs(s.H - quantities.sphere_geometry(gneg, s.r0).H),
                abs(metrics.adm_mass(pair.flipped, r) + 1.0),
            )
        for r in equality_radii(g):
            worst_vh = max(worst_vh, abs(conformal.vh_identity_check(pair, r).slack))
    ok = worst_inv <= 1e-12 and worst_match <= 1e-9 and worst_vh <= 1e-10
    _criterion(
        "7 conformal involution (1e-12), sign-flip match (1e-9), VH identity (1e-10)",
        ok, f"inv={worst_inv:.2e} match={worst_match:.2e} vh={worst_vh:.2e}",
    )


def test_criterion_08_stability_spectra():
    worst_eig = max(
        abs(stability.laplace_spectrum_axisymmetric(n, 1.0, 1, 512)[0] - (n - 1))
        for n in (3, 4, 5, 6, 7)
    )
    worst_id = 0.0
    worst_bound = 0.0
    worst_kernel = 0.0
    for n in (3, 4, 5, 6, 7):
        for r0 in (1.0, 2.0, 4.0):
            for H0 in (0.0, 0.25 * (n - 1) / r0, 0.9 * (n - 1) / r0):
                lam = stability.lambda1_round(n, r0, H0)
                thr = stability.schwarzschild_stability_threshold(n, r0, H0)
                worst_id = max(worst_id, abs(lam - thr) / max(1.0, abs(thr)))
                worst_bound = max(worst_bound,
                                  abs(stability.eigenvalue_bound_check(n, r0, H0).slack))
                m0 = quantities.m0_of(n, r0, H0)
                if m0 > 0.0:
                    rep = stability.extension_kernel_check(n, r0, H0, 512)
                    expect = n * (n - 1) * m0 / r0**n
                    worst_kernel = max(worst_kernel, abs(rep.slack - expect))
    ok = (worst_eig <= 1e-6 and worst_id <= 1e-12 and worst_bound <= 1e-12
          and worst_kernel <= 1e-5)
    _criterion(
        "8 spectra: eig1 1e-6, closed-form identity 1e-12, bound 1e-12, kernel 1e-5",
        ok,
        f"eig={worst_eig:.2e} id={worst_id:.2e} bound={worst_bound:.2e} "
        f"kernel={worst_kernel:.2e}",
    )


def test_criterion_09_hawking_comparison():
    g = metrics.schwarzschild(3, 1.0)
    sphere = surfaces.AxiSurface(g, surfaces.LegendreProfile(4.0, {}))
    sphere_slack = abs(surfaces.hawking_vs_q(sphere).slack)

    ok_family = True
    detail = [f"sphere={sphere_slack:.2e}"]
    for eps in (0.01, 0.02, 0.05):
        s = surfaces.AxiSurface(g, surfaces.LegendreProfile(4.0, {2: eps}))
        rep = surfaces.surface_report(s)
        hq = surfaces.hawking_vs_q(s)
        c1, c2 = surfaces.holder_chain_check(s)
        ok_family &= (
            hq.slack >= -1e-10
            and rep.min_H > 0.0
            and rep.min_H_flipped > 0.0
            and c1.slack >= -1e-10
            and c2.slack >= -1e-10
        )
        detail.append(f"eps={eps}:slack={hq.slack:.2e}")
    ok = sphere_slack <= 1e-10 and ok_family
    _criterion("9 Hawking comparison + Hoelder chains", ok, " ".join(detail))


def test_criterion_10_off_center_sphere():
    flat = metrics.flat_metric(3)
    s = surfaces.AxiSurface(flat, surfaces.offset_sphere_profile(1.0, 0.3))
    theta, _ = surfaces.AxiSurface.grid(128)
    _, _, _, H = surfaces.induced_geometry(s, theta)
    h_dev = float(np.max(np.abs(H - 2.0)))
    m_h = abs(surfaces.surface_report(s).m_hawking)
    ok = h_dev <= 1e-8 and m_h <= 1e-8
    _criterion("10 off-center Euclidean sphere (H and Hawking mass, 1e-8)",
               ok, f"H_dev={h_dev:.2e} m_H={m_h:.2e}")
