import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from staticgeo import stability
from staticgeo.errors import HypothesisError, ParameterError

from helpers import DIMS

H0_M1_R4 = 0.3535533906


def test_stability_potential_values():
    assert stability.stability_potential(3, 4.0, H0_M1_R4) == pytest.approx(0.03125, abs=1e-9)
    assert stability.stability_potential(4, 2.0, 0.5) == pytest.approx(-0.5833333333, abs=1e-9)
    for n in DIMS:
        r0 = 1.7
        c = stability.stability_potential(n, r0, (n - 1) / r0)
        assert c == pytest.approx((n - 1) / r0**2, rel=1e-12)


def test_lambda1_round_values():
    assert stability.lambda1_round(3, 4.0, H0_M1_R4) == pytest.approx(0.09375, abs=1e-9)
    assert stability.lambda1_round(3, 4.0, H0_M1_R4) == pytest.approx(6.0 / 64.0, abs=1e-9)
    assert stability.lambda1_round(5, 2.0, 0.75) == pytest.approx(2.1484375, abs=1e-12)
    for n in DIMS:
        r0 = 2.2
        assert stability.lambda1_round(n, r0, (n - 1) / r0) == pytest.approx(0.0, abs=1e-13)


def test_threshold_values():
    assert stability.schwarzschild_stability_threshold(3, 4.0, H0_M1_R4) == pytest.approx(
        0.09375, abs=1e-9
    )
    # photon sphere of the unit-mass metric: r0 = 3, H0 = 2 V/3
    thr = stability.schwarzschild_stability_threshold(3, 3.0, 0.3849001795)
    assert thr == pytest.approx(2.0 / 9.0, abs=1e-9)
    # Euclidean sphere data
    assert stability.schwarzschild_stability_threshold(4, 2.0, 1.5) == pytest.approx(0.0, abs=1e-13)


def test_alternate_threshold_differs_by_r0():
    n, r0, H0 = 4, 2.5, 0.4
    assert stability.stability_threshold_alternate(n, r0, H0) == pytest.approx(
        r0 * stability.schwarzschild_stability_threshold(n, r0, H0), rel=1e-13
    )


@settings(max_examples=60, deadline=None)
@given(
    n=st.sampled_from(DIMS),
    r0=st.floats(min_value=0.3, max_value=20.0),
    H0=st.floats(min_value=0.0, max_value=4.0),
)
def test_lambda1_equals_threshold_identity(n, r0, H0):
    lam = stability.lambda1_round(n, r0, H0)
    thr = stability.schwarzschild_stability_threshold(n, r0, H0)
    assert lam == pytest.approx(thr, abs=1e-12 * max(1.0, abs(thr)))


def test_scale_covariance():
    for s in (0.5, 2.0, 7.0):
        a = stability.lambda1_round(4, 3.0 * s, 0.7 / s)
        b = stability.lambda1_round(4, 3.0, 0.7) / s**2
        assert a == pytest.approx(b, rel=1e-12, abs=1e-15)


def test_threshold_monotone_in_h0():
    vals = [stability.schwarzschild_stability_threshold(5, 2.0, h)
            for h in np.linspace(0.1, 3.0, 12)]
    assert all(x > y for x, y in zip(vals, vals[1:]))


def test_laplace_spectrum_examples():
    assert stability.laplace_spectrum_axisymmetric(3, 1.0, 1, 512)[0] == pytest.approx(
        2.0, abs=1e-6
    )
    vals = stability.laplace_spectrum_axisymmetric(3, 2.0, 2, 512)
    assert vals[0] == pytest.approx(0.5, abs=1e-6)
    assert vals[1] == pytest.approx(1.5, abs=1e-6)
    assert stability.laplace_spectrum_axisymmetric(5, 1.0, 1, 512)[0] == pytest.approx(
        4.0, abs=1e-6
    )


@pytest.mark.parametrize("n", DIMS)
def test_laplace_first_eigenvalue_all_dims(n):
    val = stability.laplace_spectrum_axisymmetric(n, 1.0, 1, 512)[0]
    assert val == pytest.approx(float(n - 1), abs=1e-6)


def test_laplace_spectrum_second_order_convergence():
    # higher modes converge at (at least) second order in 1/N
    for n in (4, 7):
        errs = []
        for N in (128, 256, 512):
            vals = stability.laplace_spectrum_axisymmetric(n, 1.0, 3, N)
            exact = np.array([l * (l + n - 2) for l in (1, 2, 3)], dtype=float)
            errs.append(np.abs(vals - exact))
        for l_idx in (1, 2):
            assert errs[1][l_idx] <= errs[0][l_idx] / 3.0
            assert errs[2][l_idx] <= errs[1][l_idx] / 3.0


def test_laplace_spectrum_validation():
    with pytest.raises(ParameterError):
        stability.laplace_spectrum_axisymmetric(3, 1.0, 4, 16)  # N < 8 l_max
    with pytest.raises(ParameterError):
        stability.laplace_spectrum_axisymmetric(3, 1.0, 1, 33)  # odd N
    with pytest.raises(ParameterError):
        stability.laplace_spectrum_axisymmetric(3, -1.0, 1, 64)


def test_eigenvalue_bound_is_sharp_on_round_data():
    assert stability.eigenvalue_bound_check(3, 4.0, H0_M1_R4).slack == pytest.approx(0.0, abs=1e-12)
    assert stability.eigenvalue_bound_check(4, 2.0, 0.5).slack == pytest.approx(0.0, abs=1e-12)
    # a constant ambient scalar curvature shifts both sides equally
    assert stability.eigenvalue_bound_check(3, 4.0, H0_M1_R4, Rg=0.1).slack == pytest.approx(
        0.0, abs=1e-12
    )


def test_extension_kernel_check():
    rep = stability.extension_kernel_check(3, 4.0, H0_M1_R4, 512)
    assert rep.slack == pytest.approx(0.09375, abs=1e-5)
    assert rep.slack > 0.0

    rep = stability.extension_kernel_check(4, 2.0, 0.5, 512)
    assert rep.slack == pytest.approx(4.0 / 3.0, abs=1e-5)

    # Euclidean data sits on the hypothesis boundary: kernel eigenvalue 0
    rep = stability.extension_kernel_check(3, 1.0, 2.0, 512)
    assert rep.slack == pytest.approx(0.0, abs=1e-6)

    with pytest.raises(HypothesisError):
        stability.extension_kernel_check(3, 1.0, 3.0, 512)  # m0 < 0


def test_stability_spectrum_container():
    spec = stability.stability_spectrum(3, 4.0, H0_M1_R4, N=512, l_max=5)
    eigs = np.array(spec.eigenvalues)
    assert np.all(np.diff(eigs) > 0)
    assert eigs[0] == pytest.approx((3 - 1) / 16.0 - spec.c, abs=1e-6)
    assert eigs[0] == pytest.approx(stability.lambda1_round(3, 4.0, H0_M1_R4), abs=1e-6)
    d = spec.to_dict()
    assert list(d) == ["n", "r0", "H0", "c", "eigenvalues"]
