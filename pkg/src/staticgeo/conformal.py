"""Conformal mass-flip transform g -> V^(4/(n-2)) g with potential 1/V.

The flipped pair is again an asymptotically flat static system, with ADM
mass of the opposite sign; for the Schwarzschild family the flip maps mass
m to mass -m. The transform keeps the radial coordinate, so flipping twice
is the identity up to floating-point rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .metrics import WarpedStaticMetric, adm_mass, unit_sphere_area
from .quantities import sphere_geometry
from .radial import RadialPower, RadialProduct, TabulatedRadialFn
from .report import InequalityReport, identity_report, inequality_report, make_report

__all__ = [
    "ConformalPair",
    "conformal_flip",
    "mass_flip_check",
    "mean_curvature_flip",
    "vh_identity_check",
    "conformal_minkowski_check",
    "conformal_ricci_residual",
    "outer_minimizing_proxy",
]


@dataclass(frozen=True)
class ConformalPair:
    base: WarpedStaticMetric
    flipped: WarpedStaticMetric


def _sample_radii(g: WarpedStaticMetric, count: int = 64) -> np.ndarray:
    r_hi = 1e3
    for fn in (g.a, g.b, g.V):
        if isinstance(fn, TabulatedRadialFn):
            r_hi = min(r_hi, fn.r_hi)
    r_lo = g.r_min + 1e-6 * max(1.0, g.r_min) if g.r_min > 0 else 1e-3
    return np.geomspace(r_lo, r_hi, count)


def conformal_flip(g: WarpedStaticMetric) -> ConformalPair:
    """Build the conformally flipped system (requires V > 0 on the domain).

    The potential is checked on a geometric sample ladder; a non-positive
    value anywhere indicates a horizon inside the region and raises
    DomainError.
    """
    vs = g.V(_sample_radii(g))
    if np.any(vs <= 0.0):
        raise DomainError(
            f"potential of '{g.label}' is not positive on the sampled domain"
        )
    p = 4.0 / (g.n - 2)
    flipped = WarpedStaticMetric(
        n=g.n,
        a=RadialProduct(RadialPower(g.V, p), g.a),
        b=RadialProduct(RadialPower(g.V, 0.5 * p), g.b),
        V=RadialPower(g.V, -1.0),
        r_min=g.r_min,
        label=f"flip({g.label})",
    )
    return ConformalPair(base=g, flipped=flipped)


def mass_flip_check(pair: ConformalPair, r_eval: float | None = None,
                    tol: float = 1e-9) -> InequalityReport:
    """Identity: ADM mass of the flipped metric equals minus the base mass."""
    if r_eval is None:
        r_eval = 10.0 * max(1.0, pair.base.r_min)
    lhs = adm_mass(pair.flipped, r_eval)
    rhs = -adm_mass(pair.base, r_eval)
    return identity_report("mass-flip", lhs, rhs, tol)


def mean_curvature_flip(g: WarpedStaticMetric, r: float) -> float:
    """Mean curvature of the coordinate sphere in the flipped metric:

        H_flip = V^(-n/(n-2)) (2 (n-1)/(n-2) dV/dnu + H V).
    """
    s = sphere_geometry(g, r)
    n = g.n
    return s.V0 ** (-n / (n - 2)) * (
        2.0 * (n - 1) / (n - 2) * s.dV_dnu + s.H * s.V0
    )


def vh_identity_check(pair: ConformalPair, r: float,
                      tol: float = 1e-10) -> InequalityReport:
    """Identity relating the VH integrals of the two metrics:

        (1/((n-1)w)) int V_ H_ dsigma_ =
            -2 m_ + (1/((n-1)w)) int V H dsigma,

    with m_ the flipped ADM mass. Both sides are evaluated in closed form
    on the coordinate sphere at r.
    """
    g = pair.base
    n = g.n
    w = unit_sphere_area(n)
    s = sphere_geometry(g, r)
    sf = sphere_geometry(pair.flipped, r)
    lhs = sf.V0 * sf.H * sf.area / ((n - 1) * w)
    m_flip = adm_mass(pair.flipped, r)
    rhs = -2.0 * m_flip + s.V0 * s.H * s.area / ((n - 1) * w)
    return identity_report("vh-identity", lhs, rhs, tol)


def conformal_minkowski_check(g: WarpedStaticMetric, r: float,
                              tol: float = 1e-10) -> InequalityReport:
    """Potential-weighted Minkowski inequality:

        (1/((n-1)w)) int VH dsigma >=
            (int V^(2(n-1)/(n-2)) dsigma / w)^((n-2)/(n-1)).

    Equality on every Schwarzschild coordinate sphere.
    """
    s = sphere_geometry(g, r)
    n = g.n
    w = unit_sphere_area(n)
    lhs = s.V0 * s.H * s.area / ((n - 1) * w)
    rhs = (s.V0 ** (2.0 * (n - 1) / (n - 2)) * s.area / w) ** ((n - 2) / (n - 1))
    return inequality_report("conformal-minkowski", lhs, rhs, tol)


def conformal_ricci_residual(g: WarpedStaticMetric, r):
    """Residuals (res_rr, res_sph, res_harm) of the intermediate system

        Ric(g0) = ((n-1)/(n-2)) dU (x) dU,   Lap_g0 U = 0,

    for g0 = V^(2/(n-2)) g and U = ln V. For a static system all three
    vanish; they are the conformally balanced form of the static equations.
    """
    g.require_radius(r)
    n = g.n
    q = 1.0 / (n - 2)

    a, da, _ = g.a.eval(r)
    b, db, d2b = g.b.eval(r)
    V, dV, d2V = g.V.eval(r)
    if np.any(np.asarray(V) <= 0.0):
        raise DomainError("potential must be positive for the log transform")

    # g0 = V^(2q) a dr^2 + (V^q b)^2 sigma
    vq = V ** (2.0 * q)
    a0 = vq * a
    da0 = vq * (da + 2.0 * q * dV / V * a)
    b0 = V**q * b
    db0 = V**q * (db + q * dV / V * b)
    d2b0 = V**q * (
        d2b
        + 2.0 * q * dV / V * db
        + (q * d2V / V + q * (q - 1.0) * (dV / V) ** 2) * b
    )

    dU = dV / V
    d2U = d2V / V - (dV / V) ** 2

    ric_rr = -(n - 1) * (d2b0 - da0 * db0 / (2.0 * a0)) / b0
    ric_sph = (
        (n - 2) * (1.0 - db0 * db0 / a0)
        - b0 * d2b0 / a0
        + b0 * da0 * db0 / (2.0 * a0 * a0)
    )
    res_rr = ric_rr - (n - 1) * q * dU * dU
    res_sph = ric_sph
    res_harm = d2U / a0 - da0 * dU / (2.0 * a0 * a0) + (n - 1) * db0 * dU / (a0 * b0)
    return res_rr, res_sph, res_harm


def outer_minimizing_proxy(g: WarpedStaticMetric, r: float, R_max: float,
                           samples: int = 512) -> InequalityReport:
    """Mean-convexity proxy for the outer-minimizing property.

    Heuristic only: a foliation by H > 0 level sets certifies that the
    enclosed domains are strictly outer-minimizing, so the report's slack
    is the minimum of H over the coordinate spheres in [r, R_max]. It does
    NOT certify the property itself.
    """
    if not r < R_max:
        raise DomainError("need r < R_max")
    g.require_radius(r)
    rs = np.geomspace(r, R_max, samples)
    a = g.a(rs)
    b, db, _ = g.b.eval(rs)
    H = (g.n - 1) * db / (b * np.sqrt(a))
    min_h = float(np.min(H))
    return make_report("outer-minimizing-proxy", min_h, 0.0, min_h, 0.0)
