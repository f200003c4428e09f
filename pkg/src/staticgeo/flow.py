"""Inverse mean curvature flow in the rotationally symmetric reduction.

For a flow of umbilical leaves the induced metric evolves self-similarly,
so the geometry is carried entirely by the flow speed u = 1/H. The radial
(spatially constant) case reduces to the ODE

    du/dt = (n/(2(n-1))) u - ((n-1)(n-2)/(2 r0^2)) exp(-2t/(n-1)) u^3,

whose solution is known in closed form and serves as the oracle for the
solvers. Axisymmetric data evolves by the corresponding PDE on the initial
round sphere of area radius r0:

    du/dt = exp(-2t/(n-1)) u^2 Lap u + (n/(2(n-1))) u
            + (Rbar0/2 - (R_sigma0/2) exp(-2t/(n-1))) u^3,

discretized by second-order differences on a uniform theta grid (method of
lines, explicit RK4 under a parabolic step bound).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .errors import (
    DomainError,
    ParameterError,
    SingularFlowError,
    StiffnessError,
)
from .metrics import WarpedStaticMetric, check_dim, unit_sphere_area
from .quantities import m0_of
from .radial import TabulatedRadialFn, constant_fn, identity_fn
from .report import InequalityReport, make_report

__all__ = [
    "FlowConfig",
    "RadialFlowState",
    "RadialTrajectory",
    "AxiFlowState",
    "AxiTrajectory",
    "pde_grid",
    "imcf_ode_solve",
    "imcf_ode_closed_form",
    "imcf_pde_solve",
    "area_growth_check",
    "flow_to_metric",
    "radialize",
]

U_LO = 1e-8
U_HI = 1e8
MAX_ODE_STEPS = 200_000


@dataclass(frozen=True)
class FlowConfig:
    """Integrator configuration shared by the ODE and PDE solvers.

    ``N`` counts the uniform subintervals of [0, pi] for the PDE grid
    (``N + 1`` nodes including both poles).
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    t_max: float = 10.0
    N: int = 128
    dt_init: float = 1e-3

    def __post_init__(self):
        for name, v in (("rel_tol", self.rel_tol), ("abs_tol", self.abs_tol)):
            if not (1e-13 <= v <= 1e-3):
                raise ParameterError(f"{name}={v:g} outside [1e-13, 1e-3]")
        if self.t_max <= 0.0:
            raise ParameterError("t_max must be positive")
        if self.N < 32:
            raise ParameterError("N must be at least 32")
        if self.dt_init <= 0.0:
            raise ParameterError("dt_init must be positive")


@dataclass(frozen=True)
class RadialFlowState:
    """One sample of the radial flow: time, area radius, flow speed."""

    t: float
    r: float
    u: float


@dataclass(frozen=True)
class RadialTrajectory:
    n: int
    r0: float
    H0: float
    states: tuple

    def areas(self) -> np.ndarray:
        w = unit_sphere_area(self.n)
        return np.array([w * s.r ** (self.n - 1) for s in self.states])

    def records(self):
        """JSON-ready dicts {t, r, u, area} per state."""
        w = unit_sphere_area(self.n)
        for s in self.states:
            yield {"t": s.t, "r": s.r, "u": s.u, "area": w * s.r ** (self.n - 1)}


@dataclass(frozen=True)
class AxiFlowState:
    """One snapshot of the axisymmetric flow speed.

    ``theta`` spans the full uniform grid including both pole nodes; the
    interior nodes lie in (0, pi).
    """

    t: float
    theta: np.ndarray
    u: np.ndarray
    n: int
    r0: float

    def __post_init__(self):
        if not np.all(self.u > 0.0):
            raise SingularFlowError(self.t, "flow speed must stay positive")

    @property
    def r(self) -> float:
        return self.r0 * math.exp(self.t / (self.n - 1))

    @property
    def area(self) -> float:
        return unit_sphere_area(self.n) * self.r ** (self.n - 1)

    def record(self) -> dict:
        return {"t": self.t, "r": self.r, "u": self.u.tolist(), "area": self.area}


@dataclass(frozen=True)
class AxiTrajectory:
    n: int
    r0: float
    states: tuple

    def areas(self) -> np.ndarray:
        return np.array([s.area for s in self.states])


def pde_grid(N: int) -> np.ndarray:
    """Uniform theta grid with N subintervals: N+1 nodes including poles."""
    if N < 32:
        raise ParameterError("N must be at least 32")
    return np.linspace(0.0, math.pi, N + 1)


def _symmetric_cot(theta: np.ndarray) -> np.ndarray:
    """cot(theta) on the grid, exactly antisymmetric about pi/2.

    Built from the lower half and mirrored so that even initial data stays
    even under the stencil to rounding accuracy. Pole entries are unused
    (the pole rows use the regularized operator) and set to 0.
    """
    M = theta.size - 1
    cot = np.zeros_like(theta)
    for i in range(1, M):
        j = M - i
        if i < j:
            cot[i] = math.cos(theta[i]) / math.sin(theta[i])
            cot[j] = -cot[i]
        elif i == j:
            cot[i] = 0.0
    return cot


def imcf_ode_solve(n: int, r0: float, H0: float,
                   cfg: FlowConfig = FlowConfig()) -> RadialTrajectory:
    """Integrate the radial flow-speed ODE from u(0) = 1/H0.

    Adaptive Dormand-Prince 5(4) steps with local error below the
    configured tolerances; states are emitted at every accepted step.
    Raises SingularFlowError when u leaves [1e-8, 1e8] (the error carries
    the flow time) and StiffnessError on step-size underflow.
    """
    n = check_dim(n)
    if r0 <= 0.0 or H0 <= 0.0:
        raise ParameterError("r0 and H0 must be positive")
    c_lin = n / (2.0 * (n - 1.0))
    c_cub = 0.5 * (n - 1.0) * (n - 2.0) / r0**2
    decay = 2.0 / (n - 1.0)
    u0 = 1.0 / H0

    ts = np.empty(MAX_ODE_STEPS)
    us = np.empty(MAX_ODE_STEPS)
    count, status, t_stat = _kernels.ode_integrate(
        c_lin, c_cub, decay, u0, cfg.t_max, cfg.rel_tol, cfg.abs_tol,
        cfg.dt_init, U_LO, U_HI, MAX_ODE_STEPS, ts, us,
    )
    if status == _kernels.STATUS_SINGULAR:
        raise SingularFlowError(t_stat)
    if status == _kernels.STATUS_STIFF:
        raise StiffnessError(f"step size underflow at t={t_stat:.6g}")
    if status == _kernels.STATUS_MAXSTEPS:
        raise StiffnessError(f"step budget exhausted at t={t_stat:.6g}")

    states = tuple(
        RadialFlowState(t=float(ts[k]), r=r0 * math.exp(ts[k] / (n - 1)),
                        u=float(us[k]))
        for k in range(count)
    )
    return RadialTrajectory(n=n, r0=float(r0), H0=float(H0), states=states)


def imcf_ode_closed_form(n: int, r0: float, H0: float, t: float
                         ) -> RadialFlowState:
    """Exact radial solution: r = r0 e^(t/(n-1)),
    u = r / ((n-1) sqrt(1 - 2 m0 r^(2-n))) with m0 = m0_of(n, r0, H0)."""
    n = check_dim(n)
    if r0 <= 0.0 or H0 <= 0.0:
        raise ParameterError("r0 and H0 must be positive")
    m0 = m0_of(n, r0, H0)
    r = r0 * math.exp(t / (n - 1))
    disc = 1.0 - 2.0 * m0 * r ** (2 - n)
    if disc <= 0.0:
        raise DomainError(
            f"r^(n-2) = {r ** (n - 2):.6g} does not exceed 2 m0 = {2 * m0:.6g}"
        )
    u = r / ((n - 1) * math.sqrt(disc))
    return RadialFlowState(t=float(t), r=float(r), u=float(u))


def imcf_pde_solve(n: int, r0: float, u0: Sequence[float],
                   cfg: FlowConfig = FlowConfig(), rbar0: float = 0.0,
                   r_sigma0: Optional[Sequence[float]] = None,
                   n_save: int = 11) -> AxiTrajectory:
    """Method-of-lines solution of the axisymmetric flow-speed PDE.

    ``u0`` gives the initial flow speed on ``pde_grid(cfg.N)``. ``rbar0``
    is the constant ambient scalar curvature (0 in vacuum); ``r_sigma0``
    optionally replaces the round-sphere intrinsic curvature
    (n-1)(n-2)/r0^2 with nodal values. Snapshots are stored at ``n_save``
    evenly spaced times including t = 0 and t = t_max.
    """
    n = check_dim(n)
    if r0 <= 0.0:
        raise ParameterError("r0 must be positive")
    theta = pde_grid(cfg.N)
    u = np.array(u0, dtype=float)
    if u.shape != theta.shape:
        raise ParameterError(
            f"u0 has {u.size} values; grid with N={cfg.N} needs {theta.size}"
        )
    if not np.all(np.isfinite(u)) or not np.all((u > U_LO) & (u < U_HI)):
        raise SingularFlowError(0.0, "initial flow speed outside (1e-8, 1e8)")

    if r_sigma0 is None:
        rsig_half = np.full_like(u, 0.5 * (n - 1) * (n - 2) / r0**2)
    else:
        rsig_half = 0.5 * np.asarray(r_sigma0, dtype=float)
        if rsig_half.shape != theta.shape:
            raise ParameterError("r_sigma0 must match the grid")

    M = cfg.N
    h = math.pi / M
    cot = _symmetric_cot(theta)
    decay = 2.0 / (n - 1.0)
    c_lin = n / (2.0 * (n - 1.0))
    # Parabolic bound 0.2 h^2 r0^2 e^(2t/(n-1)) / max u^2, tightened by the
    # pole-row factor (n-1)/2 for n > 3 to stay inside RK4 stability.
    pole_fac = max(1.0, 0.5 * (n - 1.0))
    cfl = 0.2 * h * h * r0**2 / pole_fac
    dt_cap = 0.05

    scratch = [np.empty_like(u) for _ in range(5)]
    save_times = np.linspace(0.0, cfg.t_max, max(2, n_save))
    states = [AxiFlowState(t=0.0, theta=theta, u=u.copy(), n=n, r0=float(r0))]
    t = 0.0
    for t_target in save_times[1:]:
        t, status = _kernels.pde_advance(
            u, t, float(t_target), 1.0 / (h * h), 0.5 / h, float(n - 2), cot,
            1.0 / r0**2, c_lin, 0.5 * rbar0, rsig_half,
            (n - 1.0) * 2.0 / (h * h), decay, cfl, dt_cap, U_LO, U_HI,
            *scratch,
        )
        if status == _kernels.STATUS_SINGULAR:
            raise SingularFlowError(t)
        if status == _kernels.STATUS_STIFF:
            raise StiffnessError(f"PDE step below 1e-12 at t={t:.6g}")
        states.append(AxiFlowState(t=float(t), theta=theta, u=u.copy(), n=n,
                                   r0=float(r0)))
    return AxiTrajectory(n=n, r0=float(r0), states=tuple(states))


def area_growth_check(traj, tol: float = 1e-12) -> InequalityReport:
    """Self-similar area law |Sigma_t| = e^t |Sigma_0|.

    slack is minus the worst relative deviation of |Sigma_t| / (e^t
    |Sigma_0|) from 1 over the trajectory (relative form, so the check is
    meaningful at large t where e^t is astronomically big).
    """
    areas = traj.areas()
    ts = np.array([s.t for s in traj.states])
    dev = np.abs(areas / (areas[0] * np.exp(ts)) - 1.0)
    worst = float(np.max(dev))
    return make_report("area-growth", worst, 0.0, -worst, tol)


def flow_to_metric(traj: RadialTrajectory, tol: float = 1e-7):
    """Reconstruct the ambient radial metric coefficient from a radial
    trajectory and compare with the vacuum closed form.

    The flow gauge gives a(r) = ((n-1) u / r)^2 along r = r0 e^(t/(n-1));
    for vacuum data this must match 1/(1 - 2 m0 r^(2-n)). Returns the
    reconstructed metric (potential left as the constant 1, since the flow
    carries no potential information) plus a deviation report.
    """
    n = traj.n
    rs = np.array([s.r for s in traj.states])
    us = np.array([s.u for s in traj.states])
    a_rec = ((n - 1) * us / rs) ** 2
    m0 = m0_of(n, traj.r0, traj.H0)
    a_ref = 1.0 / (1.0 - 2.0 * m0 * rs ** (2.0 - n))
    max_rel = float(np.max(np.abs(a_rec - a_ref) / a_ref))

    rs_u, idx = np.unique(rs, return_index=True)
    metric = WarpedStaticMetric(
        n=n,
        a=TabulatedRadialFn(rs_u, a_rec[idx]),
        b=identity_fn(),
        V=constant_fn(1.0),
        r_min=float(rs_u[0]),
        label="imcf-reconstruction (no potential)",
    )
    report = make_report("flow-metric-reconstruction", max_rel, 0.0,
                         -max_rel, tol)
    return metric, report


def radialize(traj: AxiTrajectory, tol: float = 1e-9) -> RadialTrajectory:
    """Collapse a spatially constant axisymmetric trajectory to radial form.

    Raises ParameterError when any snapshot varies over the sphere by more
    than ``tol`` relative to its mean.
    """
    states = []
    for s in traj.states:
        mean = float(np.mean(s.u))
        spread = float(np.max(s.u) - np.min(s.u))
        if spread > tol * max(1.0, abs(mean)):
            raise ParameterError(
                f"trajectory is not radially symmetric at t={s.t:.6g} "
                f"(spread {spread:.3g})"
            )
        states.append(RadialFlowState(t=s.t, r=s.r, u=mean))
    H0 = 1.0 / states[0].u
    return RadialTrajectory(n=traj.n, r0=traj.r0, H0=H0, states=tuple(states))
