"""Per-sphere geometric functionals and the Minkowski-type inequality checks.

All operations act on coordinate spheres {r = const} of a warped static
metric. Rotational symmetry makes every surface integrand constant, so the
integrals are evaluated in closed form (integrand times area); quadrature
is reserved for genuinely non-round surfaces in :mod:`staticgeo.surfaces`.

Slack orientation: slack >= 0 means the inequality holds; identity checks
report slack = -|lhs - rhs|.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .errors import ParameterError
from .metrics import WarpedStaticMetric, adm_mass, unit_sphere_area
from .report import InequalityReport, identity_report, inequality_report, make_report

__all__ = [
    "SphereReport",
    "sphere_geometry",
    "m0_of",
    "minkowski_check",
    "levelset_minkowski_check",
    "willmore_check",
    "yamabe_energy",
    "codazzi_beta",
    "bartnik_mass_identity_check",
    "hawking_q_check",
]


@dataclass(frozen=True)
class SphereReport:
    """Geometry of a single coordinate sphere.

    ``hawking`` (Hawking mass) and ``q`` (the potential-weighted analogue)
    are defined only in ambient dimension 3 and are None otherwise.
    """

    r: float
    area: float
    r0: float
    H: float
    V0: float
    dV_dnu: float
    m0: float
    hawking: Optional[float]
    q: Optional[float]

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def m0_of(n: int, r0: float, H0: float) -> float:
    """Mass of the Schwarzschild sphere with area radius r0 and mean
    curvature H0:  (r0^(n-2)/2) (1 - r0^2 H0^2 / (n-1)^2)."""
    if r0 <= 0.0:
        raise ParameterError("r0 must be positive")
    if H0 < 0.0:
        raise ParameterError("H0 must be non-negative")
    return 0.5 * r0 ** (n - 2) * (1.0 - (r0 * H0 / (n - 1)) ** 2)


def sphere_geometry(g: WarpedStaticMetric, r: float) -> SphereReport:
    """Evaluate area, mean curvature, potential data and quasi-local masses
    on the coordinate sphere at radius r."""
    g.require_radius(r)
    n = g.n
    w = unit_sphere_area(n)
    a = g.a(r)
    sqrt_a = np.sqrt(a)
    b, db, _ = g.b.eval(r)
    V0 = g.V(r)
    dV = g.V.deriv(r)

    H = (n - 1) * db / (b * sqrt_a)
    area = w * b ** (n - 1)
    r0 = b
    dV_dnu = dV / sqrt_a
    m0 = m0_of(n, r0, H)

    hawking = q = None
    if n == 3:
        # constant integrands: int H^2 = H^2 area, int VH = V0 H area
        hawking = 0.5 * r0 * (1.0 - H * H * area / (16.0 * np.pi))
        q = 0.5 * r0 * (1.0 - V0 * H * area / (8.0 * np.pi * r0))

    return SphereReport(
        r=float(r),
        area=float(area),
        r0=float(r0),
        H=float(H),
        V0=float(V0),
        dV_dnu=float(dV_dnu),
        m0=float(m0),
        hawking=None if hawking is None else float(hawking),
        q=None if q is None else float(q),
    )


def minkowski_check(g: WarpedStaticMetric, r: float, m: float,
                    tol: float = 1e-10) -> InequalityReport:
    """Static Minkowski inequality on a coordinate sphere:

        (1/((n-1)w)) int VH dsigma + 2m  >=  (|Sigma|/w)^((n-2)/(n-1)).

    ``m`` is the ADM mass (see :func:`staticgeo.metrics.adm_mass`).
    Equality holds on every Schwarzschild coordinate sphere.
    """
    s = sphere_geometry(g, r)
    n = g.n
    w = unit_sphere_area(n)
    lhs = s.V0 * s.H * s.area / ((n - 1) * w) + 2.0 * m
    rhs = (s.area / w) ** ((n - 2) / (n - 1))
    return inequality_report("minkowski", lhs, rhs, tol)


def levelset_minkowski_check(g: WarpedStaticMetric, r: float,
                             tol: float = 1e-10) -> InequalityReport:
    """Equipotential-boundary Minkowski inequality:

        (1/((n-1)w)) (|Sigma|/w)^((2-n)/(n-1)) int H dsigma  >=  V0.
    """
    s = sphere_geometry(g, r)
    n = g.n
    w = unit_sphere_area(n)
    lhs = (s.area / w) ** ((2 - n) / (n - 1)) * s.H * s.area / ((n - 1) * w)
    rhs = s.V0
    return inequality_report("levelset-minkowski", lhs, rhs, tol)


def willmore_check(g: WarpedStaticMetric, r: float,
                   tol: float = 1e-10) -> InequalityReport:
    """Willmore-type bound on the potential:

        (1/((n-1) w^(1/(n-1)))) (int H^(n-1) dsigma)^(1/(n-1))  >=  V0.

    Sharp exactly when H is constant (Hoelder saturation), so every
    coordinate sphere gives equality together with the level-set bound.
    """
    s = sphere_geometry(g, r)
    n = g.n
    w = unit_sphere_area(n)
    lhs = (s.H ** (n - 1) * s.area) ** (1.0 / (n - 1)) / ((n - 1) * w ** (1.0 / (n - 1)))
    rhs = s.V0
    return inequality_report("willmore", lhs, rhs, tol)


def yamabe_energy(n: int, r0: float) -> float:
    """Total-scalar-curvature (Yamabe) energy of the round metric of area
    radius r0: (|Sigma|/w)^((3-n)/(n-1)) int R_sigma dsigma.

    Scale invariant; equals (n-1)(n-2) w for every r0.
    """
    w = unit_sphere_area(n)
    if r0 <= 0.0:
        raise ParameterError("r0 must be positive")
    area = w * r0 ** (n - 1)
    r_sigma = (n - 1) * (n - 2) / r0**2
    return (area / w) ** ((3 - n) / (n - 1)) * r_sigma * area


def codazzi_beta(g: WarpedStaticMetric, r: float) -> float:
    """Per-sphere constant beta = dV/dnu + ((n-2)/(n-1)) V0 H.

    On a static metric with equipotential umbilical spheres this combination
    is independent of the point on the sphere.
    """
    s = sphere_geometry(g, r)
    n = g.n
    return s.dV_dnu + (n - 2) / (n - 1) * s.V0 * s.H


def bartnik_mass_identity_check(g: WarpedStaticMetric, r: float,
                                tol: float = 1e-10) -> InequalityReport:
    """Identity m = (n-1) V0 m0 / (H0 r0) on coordinate spheres of static
    metrics (mass flux rewritten through the sphere data)."""
    s = sphere_geometry(g, r)
    n = g.n
    lhs = adm_mass(g, r)
    rhs = (n - 1) * s.V0 * s.m0 / (s.H * s.r0)
    return identity_report("bartnik-mass-identity", lhs, rhs, tol)


def hawking_q_check(g: WarpedStaticMetric, r: float,
                    tol: float = 1e-10) -> InequalityReport:
    """Q(Sigma) >= Hawking mass on a coordinate sphere (n = 3 only).

    Both functionals coincide with the ADM mass on Schwarzschild spheres,
    so the slack is zero there.
    """
    if g.n != 3:
        raise ParameterError("Hawking mass comparison is defined for n = 3")
    s = sphere_geometry(g, r)
    return make_report("hawking-q", s.q, s.hawking, s.q - s.hawking, tol)
