"""Warped static metrics, the exact-solution catalog, and mass/residual primitives.

A rotationally symmetric static system is stored in the warped form

    g = a(r) dr^2 + b(r)^2 sigma_std,

together with its potential V(r), on the coordinate domain r > r_min.
``sigma_std`` is the round unit (n-1)-sphere metric. The static equations

    Hess V = V Ric,   Lap V = 0

reduce to three scalar residuals in this form, which every catalog entry
satisfies identically; `static_residual` evaluates them for arbitrary data.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError, ParameterError
from .radial import ClosedFormRadialFn, RadialFn, TabulatedRadialFn, identity_fn

__all__ = [
    "DIM_MIN",
    "DIM_MAX",
    "check_dim",
    "unit_sphere_area",
    "WarpedStaticMetric",
    "SchwarzschildParams",
    "schwarzschild",
    "schwarzschild_isotropic",
    "flat_metric",
    "static_residual",
    "adm_mass",
    "load_metric",
    "metric_from_tables",
    "catalog",
    "radius_ladder",
    "v_at_infinity",
    "perturb_potential",
]

DIM_MIN = 3
DIM_MAX = 7


def check_dim(n: int) -> int:
    """Validate the ambient dimension (the supported range is 3..7)."""
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DimensionError(f"dimension must be an integer, got {n!r}")
    if not (DIM_MIN <= n <= DIM_MAX):
        raise DimensionError(f"dimension n={n} outside supported range [3, 7]")
    return int(n)


def unit_sphere_area(n: int) -> float:
    """Area of the unit (n-1)-sphere, 2 pi^(n/2) / Gamma(n/2)."""
    n = check_dim(n)
    return 2.0 * math.pi ** (n / 2.0) / math.gamma(n / 2.0)


@dataclass(frozen=True)
class WarpedStaticMetric:
    """Immutable rotationally symmetric static system (n, a, b, V)."""

    n: int
    a: RadialFn
    b: RadialFn
    V: RadialFn
    r_min: float
    label: str = ""

    def __post_init__(self):
        check_dim(self.n)

    def require_radius(self, r) -> None:
        """Raise DomainError unless every r lies inside (r_min, inf)."""
        if np.any(np.asarray(r, dtype=float) <= self.r_min):
            raise DomainError(
                f"radius {r} outside domain r > r_min = {self.r_min:.6g} "
                f"of metric '{self.label}'"
            )


@dataclass(frozen=True)
class SchwarzschildParams:
    """Mass parameter for the rotationally symmetric vacuum solution.

    The horizon radius is r_m = (max(0, 2m))^(1/(n-2)); the metric lives on
    r > r_m. Negative and zero masses are admissible (r_m = 0).
    """

    n: int
    m: float

    def __post_init__(self):
        check_dim(self.n)

    @property
    def horizon_radius(self) -> float:
        return max(0.0, 2.0 * self.m) ** (1.0 / (self.n - 2))


def schwarzschild(n: int, m: float) -> WarpedStaticMetric:
    """Schwarzschild system of mass m in area coordinates:

    a = 1/(1 - 2m r^(2-n)),  b = r,  V = sqrt(1 - 2m r^(2-n)).
    """
    p = SchwarzschildParams(n, float(m))
    n = p.n
    m = p.m
    k = float(n - 2)

    def _vsq(r):
        return 1.0 - 2.0 * m * r**-k

    # d/dr (2m r^-k) = -2mk r^-(k+1); V = sqrt(vsq)
    def V(r):
        return np.sqrt(_vsq(r))

    def dV(r):
        return m * k * r ** (-k - 1.0) / np.sqrt(_vsq(r))

    def d2V(r):
        v = np.sqrt(_vsq(r))
        return -m * k * (k + 1.0) * r ** (-k - 2.0) / v - (
            m * k * r ** (-k - 1.0)
        ) ** 2 / v**3

    def a(r):
        return 1.0 / _vsq(r)

    def da(r):
        return -2.0 * m * k * r ** (-k - 1.0) / _vsq(r) ** 2

    def d2a(r):
        v2 = _vsq(r)
        g = 2.0 * m * k * r ** (-k - 1.0)  # = v2'
        return (2.0 * m * k * (k + 1.0) * r ** (-k - 2.0)) / v2**2 + 2.0 * g * g / v2**3

    return WarpedStaticMetric(
        n=n,
        a=ClosedFormRadialFn(a, da, d2a),
        b=identity_fn(),
        V=ClosedFormRadialFn(V, dV, d2V),
        r_min=p.horizon_radius,
        label=f"schwarzschild(n={n}, m={m:g})",
    )


def schwarzschild_isotropic(n: int, m: float) -> WarpedStaticMetric:
    """Schwarzschild system of mass m > 0 in the isotropic radial chart:

    a = phi^(4/(n-2)),  b = s phi^(2/(n-2)),  V = (2 - phi)/phi,

    with phi(s) = 1 + (m/2) s^(2-n) and inner boundary s = (m/2)^(1/(n-2)).
    """
    n = check_dim(n)
    m = float(m)
    if m <= 0.0:
        raise ParameterError("isotropic chart requires m > 0")
    k = float(n - 2)
    half_m = 0.5 * m

    def phi(s):
        return 1.0 + half_m * s**-k

    def dphi(s):
        return -half_m * k * s ** (-k - 1.0)

    def d2phi(s):
        return half_m * k * (k + 1.0) * s ** (-k - 2.0)

    pa = 4.0 / k

    def a(s):
        return phi(s) ** pa

    def da(s):
        return pa * phi(s) ** (pa - 1.0) * dphi(s)

    def d2a(s):
        f = phi(s)
        return pa * (pa - 1.0) * f ** (pa - 2.0) * dphi(s) ** 2 + pa * f ** (
            pa - 1.0
        ) * d2phi(s)

    pb = 2.0 / k

    def b(s):
        return s * phi(s) ** pb

    def db(s):
        f = phi(s)
        return f**pb + s * pb * f ** (pb - 1.0) * dphi(s)

    def d2b(s):
        f = phi(s)
        df = dphi(s)
        return (
            2.0 * pb * f ** (pb - 1.0) * df
            + s * pb * (pb - 1.0) * f ** (pb - 2.0) * df**2
            + s * pb * f ** (pb - 1.0) * d2phi(s)
        )

    # V = (1 - (m/2) s^-k) / phi = (2 - phi)/phi = 2/phi - 1
    def V(s):
        return 2.0 / phi(s) - 1.0

    def dV(s):
        return -2.0 * dphi(s) / phi(s) ** 2

    def d2V(s):
        f = phi(s)
        return -2.0 * d2phi(s) / f**2 + 4.0 * dphi(s) ** 2 / f**3

    return WarpedStaticMetric(
        n=n,
        a=ClosedFormRadialFn(a, da, d2a),
        b=ClosedFormRadialFn(b, db, d2b),
        V=ClosedFormRadialFn(V, dV, d2V),
        r_min=half_m ** (1.0 / k),
        label=f"schwarzschild-isotropic(n={n}, m={m:g})",
    )


def flat_metric(n: int) -> WarpedStaticMetric:
    """Euclidean space with V = 1 (the m = 0 Schwarzschild system)."""
    g = schwarzschild(n, 0.0)
    return WarpedStaticMetric(
        n=g.n, a=g.a, b=g.b, V=g.V, r_min=0.0, label=f"flat(n={n})"
    )


def static_residual(g: WarpedStaticMetric, r) -> tuple:
    """Residuals (res_harmonic, res_rr, res_sph) of the static equations.

    res_harmonic is Lap V; res_rr and res_sph are the rr and tangential
    components of Hess V - V Ric. All three vanish identically for exact
    static systems.
    """
    g.require_radius(r)
    a, da, _ = g.a.eval(r)
    b, db, d2b = g.b.eval(r)
    V, dV, d2V = g.V.eval(r)
    n = g.n

    res_harm = d2V / a - da * dV / (2.0 * a * a) + (n - 1) * db * dV / (a * b)

    # Ricci of the warped metric: Ric_rr and the coefficient of the round
    # unit-sphere metric in the tangential block.
    ric_rr = -(n - 1) * (d2b - da * db / (2.0 * a)) / b
    ric_sph = (
        (n - 2) * (1.0 - db * db / a) - b * d2b / a + b * da * db / (2.0 * a * a)
    )

    hess_rr = d2V - da * dV / (2.0 * a)
    hess_sph = b * db * dV / a

    res_rr = hess_rr - V * ric_rr
    res_sph = hess_sph - V * ric_sph
    return res_harm, res_rr, res_sph


def adm_mass(g: WarpedStaticMetric, r_eval: float) -> float:
    """Mass flux integral (1/(n-2)) V'(r) b(r)^(n-1) / sqrt(a(r)).

    For a static system the potential is harmonic, so the flux is the same
    on every coordinate sphere; the value is the ADM mass.
    """
    g.require_radius(r_eval)
    a = g.a(r_eval)
    b = g.b(r_eval)
    dV = g.V.deriv(r_eval)
    return dV * b ** (g.n - 1) / ((g.n - 2) * np.sqrt(a))


def metric_from_tables(n, r, a, b, V, label="tabulated") -> WarpedStaticMetric:
    """Build a metric from sampled (r, a, b, V) tables (natural cubic splines)."""
    n = check_dim(n)
    r = np.asarray(r, dtype=float)
    for name, vals in (("a", a), ("b", b), ("V", V)):
        if len(vals) != r.size:
            raise ParameterError(f"table '{name}' length does not match r")
    return WarpedStaticMetric(
        n=n,
        a=TabulatedRadialFn(r, a),
        b=TabulatedRadialFn(r, b),
        V=TabulatedRadialFn(r, V),
        r_min=float(r[0]),
        label=label,
    )


def _load_metric_file(path: str) -> WarpedStaticMetric:
    with open(path) as fh:
        doc = json.load(fh)
    for key in ("n", "r", "a", "b", "V"):
        if key not in doc:
            raise ParameterError(f"metric file missing key '{key}'")
    r = np.asarray(doc["r"], dtype=float)
    if not np.all(np.diff(r) > 0):
        raise ParameterError("metric file radii must be strictly increasing")
    return metric_from_tables(
        doc["n"], r, doc["a"], doc["b"], doc["V"], label=f"file:{path}"
    )


_CATALOG_SCHEMAS = {
    "schwarzschild": "params: n (3..7), m (any real); domain r > (max(0,2m))^(1/(n-2))",
    "schwarzschild-isotropic": "params: n (3..7), m > 0; domain s > (m/2)^(1/(n-2))",
    "flat": "params: n (3..7); Euclidean space, V = 1",
    "file:<path>": 'JSON {"n": int, "r": [..], "a": [..], "b": [..], "V": [..]}, r strictly increasing',
}


def catalog() -> dict:
    """Labels of the available metrics and their parameter schemas."""
    return dict(_CATALOG_SCHEMAS)


def load_metric(label: str, n: int = 3, m: float = 1.0) -> WarpedStaticMetric:
    """Look up a catalog metric by label ('file:<path>' loads a JSON table)."""
    if label.startswith("file:"):
        return _load_metric_file(label[len("file:"):])
    if label == "schwarzschild":
        return schwarzschild(n, m)
    if label == "schwarzschild-isotropic":
        return schwarzschild_isotropic(n, m)
    if label == "flat":
        return flat_metric(n)
    raise ParameterError(f"unknown metric label '{label}'")


def radius_ladder(g: WarpedStaticMetric, count: int = 20, r_max: float = 1e3):
    """Log-spaced sample radii inside the metric's domain.

    Starts just outside the inner boundary (at 1.1 r_min, or 0.35 when the
    domain reaches r = 0) and ends at r_max.
    """
    r_lo = 1.1 * g.r_min if g.r_min > 0.0 else 0.35
    if r_lo >= r_max:
        raise ParameterError("r_max must exceed the inner sample radius")
    return np.geomspace(r_lo, r_max, count)


def v_at_infinity(g: WarpedStaticMetric, ladder=(1e2, 1e3, 1e4)) -> float:
    """Asymptotic value of V via Richardson extrapolation in b^(2-n).

    Fits V(r) = V_inf + c b(r)^(2-n) through the two largest ladder rungs;
    for catalog metrics the result is 1 to high accuracy.
    """
    rs = sorted(ladder)
    if len(rs) < 2:
        raise ParameterError("ladder needs at least two rungs")
    r1, r2 = rs[-2], rs[-1]
    g.require_radius(r1)
    x1 = g.b(r1) ** (2 - g.n)
    x2 = g.b(r2) ** (2 - g.n)
    v1 = g.V(r1)
    v2 = g.V(r2)
    return v2 - x2 * (v1 - v2) / (x1 - x2)


def perturb_potential(g: WarpedStaticMetric, eps: float = 0.01, power: int = 3
                      ) -> WarpedStaticMetric:
    """Replace V by V (1 + eps/r^power); breaks staticity for eps != 0."""
    from .radial import RadialProduct

    p = float(power)
    bump = ClosedFormRadialFn(
        lambda r: 1.0 + eps * r**-p,
        lambda r: -eps * p * r ** (-p - 1.0),
        lambda r: eps * p * (p + 1.0) * r ** (-p - 2.0),
    )
    return WarpedStaticMetric(
        n=g.n,
        a=g.a,
        b=g.b,
        V=RadialProduct(g.V, bump),
        r_min=g.r_min,
        label=g.label + f"+Vpert({eps:g}/r^{power:g})",
    )
