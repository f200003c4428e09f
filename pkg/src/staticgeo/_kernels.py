"""Time-stepping inner loops for the flow solvers.

Two implementations exist for each kernel:

* a scalar-loop form, compiled with ``numba.njit`` when the numba path is
  active (:mod:`staticgeo._accel`);
* a fallback (pure python for the scalar ODE, vectorized numpy for the
  PDE) used when numba is unavailable or disabled via ``STATICGEO_NUMBA=0``.

Both forms implement the same arithmetic; ``benchmarks/bench_kernels.py``
compares their throughput.

Status codes returned by the kernels: 0 = reached the target time,
1 = flow speed left the admissible window, 2 = step size underflow,
3 = step budget exhausted.
"""

import math

import numpy as np

from ._accel import HAVE_NUMBA, USING_NUMBA, jit_kernel

__all__ = [
    "ode_integrate",
    "pde_advance",
    "ode_integrate_python",
    "ode_integrate_numba",
    "pde_advance_numpy",
    "pde_advance_numba",
    "STATUS_OK",
    "STATUS_SINGULAR",
    "STATUS_STIFF",
    "STATUS_MAXSTEPS",
]

STATUS_OK = 0
STATUS_SINGULAR = 1
STATUS_STIFF = 2
STATUS_MAXSTEPS = 3


# ----------------------------------------------------------------------
# Radial flow speed ODE: du/dt = c_lin u - c_cub exp(-decay t) u^3,
# integrated with the Dormand-Prince 5(4) embedded pair (FSAL).

def _ode_integrate_impl(c_lin, c_cub, decay, u0, t_end, rtol, atol, h0,
                        u_lo, u_hi, max_steps, ts, us):
    t = 0.0
    u = u0
    ts[0] = 0.0
    us[0] = u0
    count = 1
    if not (u_lo < u < u_hi):
        return count, STATUS_SINGULAR, 0.0
    h = h0
    k1 = c_lin * u - c_cub * math.exp(-decay * t) * u * u * u
    status = STATUS_MAXSTEPS
    while count < max_steps:
        if t >= t_end:
            status = STATUS_OK
            break
        if h < 1e-13 * (1.0 + abs(t)):
            status = STATUS_STIFF
            break
        hh = h
        if hh > t_end - t:
            hh = t_end - t

        y2 = u + hh * 0.2 * k1
        k2 = c_lin * y2 - c_cub * math.exp(-decay * (t + 0.2 * hh)) * y2 * y2 * y2
        y3 = u + hh * (0.075 * k1 + 0.225 * k2)
        k3 = c_lin * y3 - c_cub * math.exp(-decay * (t + 0.3 * hh)) * y3 * y3 * y3
        y4 = u + hh * ((44.0 / 45.0) * k1 - (56.0 / 15.0) * k2 + (32.0 / 9.0) * k3)
        k4 = c_lin * y4 - c_cub * math.exp(-decay * (t + 0.8 * hh)) * y4 * y4 * y4
        y5 = u + hh * (
            (19372.0 / 6561.0) * k1
            - (25360.0 / 2187.0) * k2
            + (64448.0 / 6561.0) * k3
            - (212.0 / 729.0) * k4
        )
        k5 = c_lin * y5 - c_cub * math.exp(-decay * (t + (8.0 / 9.0) * hh)) * y5 * y5 * y5
        y6 = u + hh * (
            (9017.0 / 3168.0) * k1
            - (355.0 / 33.0) * k2
            + (46732.0 / 5247.0) * k3
            + (49.0 / 176.0) * k4
            - (5103.0 / 18656.0) * k5
        )
        k6 = c_lin * y6 - c_cub * math.exp(-decay * (t + hh)) * y6 * y6 * y6
        unew = u + hh * (
            (35.0 / 384.0) * k1
            + (500.0 / 1113.0) * k3
            + (125.0 / 192.0) * k4
            - (2187.0 / 6784.0) * k5
            + (11.0 / 84.0) * k6
        )
        k7 = c_lin * unew - c_cub * math.exp(-decay * (t + hh)) * unew * unew * unew

        err_raw = hh * (
            (71.0 / 57600.0) * k1
            - (71.0 / 16695.0) * k3
            + (71.0 / 1920.0) * k4
            - (17253.0 / 339200.0) * k5
            + (22.0 / 525.0) * k6
            - (1.0 / 40.0) * k7
        )
        au = abs(u)
        aun = abs(unew)
        sc = atol + rtol * (au if au > aun else aun)
        err = abs(err_raw) / sc
        if err != err:  # NaN
            err = 2.0

        if err <= 1.0:
            t = t + hh
            u = unew
            k1 = k7
            ts[count] = t
            us[count] = u
            count += 1
            if not (u_lo < u < u_hi):
                status = STATUS_SINGULAR
                break
        if err == 0.0:
            fac = 5.0
        else:
            fac = 0.9 * err ** (-0.2)
            if fac < 0.2:
                fac = 0.2
            elif fac > 5.0:
                fac = 5.0
        h = hh * fac
    return count, status, t


ode_integrate_python = _ode_integrate_impl
ode_integrate_numba = jit_kernel(_ode_integrate_impl)

ode_integrate = ode_integrate_numba if USING_NUMBA else ode_integrate_python


# ----------------------------------------------------------------------
# Axisymmetric flow-speed PDE on the grid theta_i = i*pi/M, i = 0..M
# (both poles are nodes). Interior Laplacian: centered second differences
# plus the cot(theta) drift; at the poles the drift limit turns the
# operator into (n-1) u_theta_theta, evaluated through an even ghost
# reflection. Classic RK4 steps under a parabolic stability bound on dt.

def _pde_rhs_numpy(u, t, out, inv_h2, inv_2h, nm2, cot, inv_r0sq, c_lin,
                   rbar0_half, rsig_half, pole_coef, decay):
    E = math.exp(-decay * t)
    lap = np.empty_like(u)
    lap[1:-1] = (u[2:] - 2.0 * u[1:-1] + u[:-2]) * inv_h2 + nm2 * cot[1:-1] * (
        u[2:] - u[:-2]
    ) * inv_2h
    lap[0] = pole_coef * (u[1] - u[0])
    lap[-1] = pole_coef * (u[-2] - u[-1])
    out[:] = (
        E * u * u * lap * inv_r0sq
        + c_lin * u
        + (rbar0_half - rsig_half * E) * (u * u * u)
    )


def pde_advance_numpy(u, t, t_target, inv_h2, inv_2h, nm2, cot, inv_r0sq,
                      c_lin, rbar0_half, rsig_half, pole_coef, decay, cfl,
                      dt_cap, u_lo, u_hi, k1, k2, k3, k4, ut):
    while t_target - t > 1e-15 * (1.0 + abs(t_target)):
        umax = np.max(np.abs(u))
        dt = cfl * math.exp(decay * t) / (umax * umax)
        if dt > dt_cap:
            dt = dt_cap
        rem = t_target - t
        if dt > rem:
            dt = rem
        if dt < 1e-12:
            return t, STATUS_STIFF

        _pde_rhs_numpy(u, t, k1, inv_h2, inv_2h, nm2, cot, inv_r0sq, c_lin,
                       rbar0_half, rsig_half, pole_coef, decay)
        ut[:] = u + 0.5 * dt * k1
        _pde_rhs_numpy(ut, t + 0.5 * dt, k2, inv_h2, inv_2h, nm2, cot,
                       inv_r0sq, c_lin, rbar0_half, rsig_half, pole_coef, decay)
        ut[:] = u + 0.5 * dt * k2
        _pde_rhs_numpy(ut, t + 0.5 * dt, k3, inv_h2, inv_2h, nm2, cot,
                       inv_r0sq, c_lin, rbar0_half, rsig_half, pole_coef, decay)
        ut[:] = u + dt * k3
        _pde_rhs_numpy(ut, t + dt, k4, inv_h2, inv_2h, nm2, cot, inv_r0sq,
                       c_lin, rbar0_half, rsig_half, pole_coef, decay)

        ut[:] = u + dt * (k1 + 2.0 * (k2 + k3) + k4) / 6.0
        if not np.all((ut > u_lo) & (ut < u_hi)):
            return t + dt, STATUS_SINGULAR
        u[:] = ut
        t = t + dt
    return t, STATUS_OK


def _make_pde_numba():
    if not HAVE_NUMBA:
        return None
    import numba

    rhs = numba.njit(cache=True)(_pde_rhs_loop_src)

    @numba.njit(cache=True)
    def advance(u, t, t_target, inv_h2, inv_2h, nm2, cot, inv_r0sq, c_lin,
                rbar0_half, rsig_half, pole_coef, decay, cfl, dt_cap,
                u_lo, u_hi, k1, k2, k3, k4, ut):
        M = u.shape[0] - 1
        while t_target - t > 1e-15 * (1.0 + abs(t_target)):
            umax = 0.0
            for i in range(M + 1):
                au = abs(u[i])
                if au > umax:
                    umax = au
            dt = cfl * math.exp(decay * t) / (umax * umax)
            if dt > dt_cap:
                dt = dt_cap
            rem = t_target - t
            if dt > rem:
                dt = rem
            if dt < 1e-12:
                return t, STATUS_STIFF

            rhs(u, t, k1, inv_h2, inv_2h, nm2, cot, inv_r0sq, c_lin,
                rbar0_half, rsig_half, pole_coef, decay)
            for i in range(M + 1):
                ut[i] = u[i] + 0.5 * dt * k1[i]
            rhs(ut, t + 0.5 * dt, k2, inv_h2, inv_2h, nm2, cot, inv_r0sq,
                c_lin, rbar0_half, rsig_half, pole_coef, decay)
            for i in range(M + 1):
                ut[i] = u[i] + 0.5 * dt * k2[i]
            rhs(ut, t + 0.5 * dt, k3, inv_h2, inv_2h, nm2, cot, inv_r0sq,
                c_lin, rbar0_half, rsig_half, pole_coef, decay)
            for i in range(M + 1):
                ut[i] = u[i] + dt * k3[i]
            rhs(ut, t + dt, k4, inv_h2, inv_2h, nm2, cot, inv_r0sq, c_lin,
                rbar0_half, rsig_half, pole_coef, decay)

            ok = True
            for i in range(M + 1):
                v = u[i] + dt * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]) / 6.0
                ut[i] = v
                if not (u_lo < v < u_hi):
                    ok = False
            if not ok:
                return t + dt, STATUS_SINGULAR
            for i in range(M + 1):
                u[i] = ut[i]
            t = t + dt
        return t, STATUS_OK

    return advance


def _pde_rhs_loop_src(u, t, out, inv_h2, inv_2h, nm2, cot, inv_r0sq, c_lin,
                      rbar0_half, rsig_half, pole_coef, decay):
    M = u.shape[0] - 1
    E = math.exp(-decay * t)
    lap0 = pole_coef * (u[1] - u[0])
    out[0] = (
        E * u[0] * u[0] * lap0 * inv_r0sq
        + c_lin * u[0]
        + (rbar0_half - rsig_half[0] * E) * (u[0] * u[0] * u[0])
    )
    for i in range(1, M):
        lap = (u[i + 1] - 2.0 * u[i] + u[i - 1]) * inv_h2 + nm2 * cot[i] * (
            u[i + 1] - u[i - 1]
        ) * inv_2h
        out[i] = (
            E * u[i] * u[i] * lap * inv_r0sq
            + c_lin * u[i]
            + (rbar0_half - rsig_half[i] * E) * (u[i] * u[i] * u[i])
        )
    lapM = pole_coef * (u[M - 1] - u[M])
    out[M] = (
        E * u[M] * u[M] * lapM * inv_r0sq
        + c_lin * u[M]
        + (rbar0_half - rsig_half[M] * E) * (u[M] * u[M] * u[M])
    )


pde_advance_numba = _make_pde_numba()

pde_advance = pde_advance_numba if USING_NUMBA else pde_advance_numpy
