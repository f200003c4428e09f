"""The numba and fallback kernel paths must agree."""

import math

import numpy as np
import pytest

from staticgeo import _kernels as K
from staticgeo._accel import HAVE_NUMBA


def _ode_args(H0=0.3535533906, t_end=2.0):
    n, r0 = 3, 4.0
    c_lin = n / (2.0 * (n - 1.0))
    c_cub = 0.5 * (n - 1.0) * (n - 2.0) / r0**2
    ts = np.empty(10000)
    us = np.empty(10000)
    return (c_lin, c_cub, 2.0 / (n - 1.0), 1.0 / H0, t_end, 1e-10, 1e-12,
            1e-3, 1e-8, 1e8, 10000, ts, us)


def test_ode_python_path_matches_closed_form():
    args = _ode_args()
    count, status, t = K.ode_integrate_python(*args)
    assert status == K.STATUS_OK and t == pytest.approx(2.0)
    r = 4.0 * math.exp(t / 2.0)
    u_exact = r / (2.0 * math.sqrt(1.0 - 2.0 / r))  # m0 = 1 closed form
    assert args[-1][count - 1] == pytest.approx(u_exact, rel=1e-8)


@pytest.mark.skipif(not HAVE_NUMBA, reason="numba not installed")
def test_ode_paths_agree_exactly():
    a1 = _ode_args()
    a2 = _ode_args()
    c1, s1, t1 = K.ode_integrate_python(*a1)
    c2, s2, t2 = K.ode_integrate_numba(*a2)
    assert (c1, s1) == (c2, s2)
    assert np.array_equal(a1[-2][:c1], a2[-2][:c2])
    assert np.array_equal(a1[-1][:c1], a2[-1][:c2])


def _pde_args(N=64, n=3, r0=4.0, u_val=2.8284271247, t_target=0.25):
    theta = np.linspace(0.0, math.pi, N + 1)
    h = math.pi / N
    u = np.full(N + 1, u_val)
    u[1:-1] *= 1.0 + 0.01 * np.cos(theta[1:-1])  # break symmetry
    cot = np.zeros_like(theta)
    cot[1:-1] = np.cos(theta[1:-1]) / np.sin(theta[1:-1])
    rsig_half = np.full_like(theta, 0.5 * (n - 1) * (n - 2) / r0**2)
    scratch = [np.empty_like(u) for _ in range(5)]
    pole_fac = max(1.0, 0.5 * (n - 1.0))
    args = (u, 0.0, t_target, 1.0 / h**2, 0.5 / h, float(n - 2), cot,
            1.0 / r0**2, n / (2.0 * (n - 1.0)), 0.0, rsig_half,
            (n - 1.0) * 2.0 / h**2, 2.0 / (n - 1.0),
            0.2 * h * h * r0**2 / pole_fac, 0.05, 1e-8, 1e8, *scratch)
    return args


def test_pde_numpy_path_runs():
    args = _pde_args()
    t, status = K.pde_advance_numpy(*args)
    assert status == K.STATUS_OK
    assert t == pytest.approx(0.25, abs=1e-12)
    assert np.all(args[0] > 0)


@pytest.mark.skipif(not HAVE_NUMBA, reason="numba not installed")
def test_pde_paths_agree():
    a1 = _pde_args()
    a2 = _pde_args()
    t1, s1 = K.pde_advance_numpy(*a1)
    t2, s2 = K.pde_advance_numba(*a2)
    assert s1 == s2 == K.STATUS_OK
    assert t1 == t2
    assert np.allclose(a1[0], a2[0], rtol=1e-13, atol=0.0)


def test_pde_singular_status():
    args = _pde_args(u_val=1.5e-8, t_target=5.0)
    # tiny speeds grow, but a huge upper... use a shrinking setup instead:
    # force the window so the initial growth trips the upper bound
    args = list(args)
    args[16] = 3e-8  # u_hi just above the data
    t, status = K.pde_advance_numpy(*args)
    assert status == K.STATUS_SINGULAR


def test_ode_singular_status():
    args = list(_ode_args(H0=1e9))
    count, status, t = K.ode_integrate_python(*args)
    assert status == K.STATUS_SINGULAR and t == 0.0
