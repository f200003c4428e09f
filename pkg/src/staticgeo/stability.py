"""Stability of round CMC spheres: closed-form first eigenvalue and a
discretized axisymmetric spectrum oracle.

The stability operator on the zero-mean functions of a CMC hypersurface is
S phi = -Lap phi - (|h|^2 + Ric(nu,nu)) phi. On a round umbilical sphere
of area radius r0 and mean curvature H0 the potential term is the constant

    c = n H0^2 / (2(n-1)) - (n-1)(n-2)/(2 r0^2) + Rg/2,

so the spectrum is the (shifted) Laplace spectrum l(l+n-2)/r0^2 - c.

The discrete oracle uses a finite-volume discretization of the
Legendre-type operator in x = cos(theta) with the sin^(n-2) weight carried
through exact cell masses and weighted centroids. With that choice the
l = 1 eigenvalue is exact to rounding (the linear eigenfunction x is
resolved exactly); higher modes converge at second order or better.

Exponent note: the closed-form threshold n(n-1) m0 / r0^n is the
dimensionally consistent form, and it equals the direct eigenvalue
(n-1)/r0^2 - c identically. An r0^(n-1) normalization of the same
quantity also circulates; it is exposed as
``stability_threshold_alternate`` for comparison.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from .errors import HypothesisError, ParameterError
from .metrics import check_dim
from .quantities import m0_of
from .report import InequalityReport, make_report

__all__ = [
    "StabilitySpectrum",
    "stability_potential",
    "lambda1_round",
    "schwarzschild_stability_threshold",
    "stability_threshold_alternate",
    "laplace_spectrum_axisymmetric",
    "eigenvalue_bound_check",
    "extension_kernel_check",
    "stability_spectrum",
]


def stability_potential(n: int, r0: float, H0: float, Rg: float = 0.0) -> float:
    """Constant potential |h|^2 + Ric(nu,nu) of a round umbilical CMC sphere,
    via the traced Gauss equation with |h|^2 = H0^2/(n-1) and intrinsic
    curvature (n-1)(n-2)/r0^2."""
    n = check_dim(n)
    if r0 <= 0.0:
        raise ParameterError("r0 must be positive")
    return (
        n * H0**2 / (2.0 * (n - 1))
        - (n - 1) * (n - 2) / (2.0 * r0**2)
        + 0.5 * Rg
    )


def lambda1_round(n: int, r0: float, H0: float, Rg: float = 0.0) -> float:
    """First stability eigenvalue on the round umbilical sphere:
    (n-1)/r0^2 minus the constant potential. Algebraically equal to
    n(n-1) m0 / r0^n - Rg/2."""
    n = check_dim(n)
    return (n - 1) / r0**2 - stability_potential(n, r0, H0, Rg)


def schwarzschild_stability_threshold(n: int, r0: float, H0: float) -> float:
    """Stability threshold n(n-1) m0 / r0^n (dimensionally consistent form;
    identical to lambda1_round at Rg = 0)."""
    n = check_dim(n)
    if r0 <= 0.0:
        raise ParameterError("r0 must be positive")
    return n * (n - 1) * m0_of(n, r0, H0) / r0**n


def stability_threshold_alternate(n: int, r0: float, H0: float) -> float:
    """The circulating r0^(n-1) normalization of the threshold, reported
    for transparency; differs from the consistent form by a factor r0."""
    n = check_dim(n)
    return n * (n - 1) * m0_of(n, r0, H0) / r0 ** (n - 1)


# ----------------------------------------------------------------------
# Discrete axisymmetric Laplace spectrum.
#
# In x = cos(theta) the operator is -(1/w) d/dx [ p du/dx ] with weight
# w = (1-x^2)^((n-3)/2) and flux p = (1-x^2)^((n-1)/2). Cell masses and
# weighted centroids use the exact antiderivatives below.

def _tridiagonal_laplacian(n: int, N: int):
    """Symmetrized finite-volume matrix of the unit-sphere axisymmetric
    Laplacian on N uniform cells in x; returns (diag, offdiag, masses).

    Fluxes use the exact face values of p = (1-x^2)^((n-1)/2). Cell masses
    are (int_cell x w dx) / x_center rather than int_cell w dx; the two
    agree to O(dx^2), but the former makes the linear eigenfunction x an
    exact discrete eigenvector, so the l = 1 eigenvalue n-1 is resolved to
    rounding for every n. Requires even N (keeps cell centers off x = 0).
    Eigenvalues approximate l(l+n-2); the constant vector spans the exact
    kernel.
    """
    if N % 2:
        raise ParameterError("N must be even")
    k2 = n - 3  # weight exponent doubled: w = (1-x^2)^(k2/2)
    faces = np.linspace(-1.0, 1.0, N + 1)
    dx = 2.0 / N
    centers = 0.5 * (faces[:-1] + faces[1:])
    # int x w dx = -(1-x^2)^((k2+2)/2) / (k2+2), and p equals the same
    # power of (1-x^2); p vanishes at the boundary faces x = +-1
    p = (1.0 - faces * faces) ** ((k2 + 2) / 2.0)
    masses = (p[:-1] - p[1:]) / ((k2 + 2) * centers)
    diag = (p[:-1] + p[1:]) / (masses * dx)
    off = -p[1:-1] / (dx * np.sqrt(masses[:-1] * masses[1:]))
    return diag, off, masses


def laplace_spectrum_axisymmetric(n: int, r0: float, l_max: int, N: int
                                  ) -> np.ndarray:
    """First l_max nonzero eigenvalues of -Lap on the round sphere of area
    radius r0 restricted to axisymmetric functions (exact values
    l(l+n-2)/r0^2). The constant mode is deflated by dropping the zero
    eigenvalue of the weighted finite-volume matrix."""
    n = check_dim(n)
    if r0 <= 0.0:
        raise ParameterError("r0 must be positive")
    if l_max < 1:
        raise ParameterError("l_max must be at least 1")
    if N < 8 * l_max:
        raise ParameterError("need N >= 8 l_max grid cells")
    diag, off, _ = _tridiagonal_laplacian(n, N)
    vals = eigvalsh_tridiagonal(diag, off, select="i",
                                select_range=(0, l_max))
    return vals[1:] / r0**2  # vals[0] ~ 0 is the constant mode


def eigenvalue_bound_check(n: int, r0: float, H0: float, Rg: float = 0.0,
                           tol: float = 1e-12) -> InequalityReport:
    """Upper bound lambda_1 <= n(n-1) m0 / r0^n - Rg/2 for CMC spheres.

    On round umbilical data the bound is saturated, so the slack vanishes.
    """
    lhs = schwarzschild_stability_threshold(n, r0, H0) - 0.5 * Rg
    rhs = lambda1_round(n, r0, H0, Rg)
    return make_report("eigenvalue-bound", lhs, rhs, lhs - rhs, tol)


def extension_kernel_check(n: int, r0: float, H0: float, N: int = 512,
                           tol: float = 0.0) -> InequalityReport:
    """Kernel triviality certificate for the boundary-potential equation.

    Forms -Lap - ((n-1)/r0^2 - n(n-1) m0/r0^n) on zero-mean axisymmetric
    functions and reports its smallest eigenvalue as the slack; a positive
    value certifies that only the trivial solution exists (forcing V and
    dV/dnu constant on the sphere). Requires m0 >= 0; at m0 = 0 the
    smallest eigenvalue degenerates to 0 (the first harmonics enter the
    kernel), the boundary of the hypothesis.
    """
    m0 = m0_of(n, r0, H0)
    if m0 < 0.0:
        raise HypothesisError(f"m0 = {m0:.6g} < 0 violates the hypothesis")
    shift = (n - 1) / r0**2 - n * (n - 1) * m0 / r0**n
    spec = laplace_spectrum_axisymmetric(n, r0, 1, N)
    smallest = float(spec[0] - shift)
    return make_report("extension-kernel", smallest, 0.0, smallest, tol)


@dataclass(frozen=True)
class StabilitySpectrum:
    """Discretized stability spectrum of a round umbilical CMC sphere.

    ``c`` is the constant potential |h|^2 + Ric(nu,nu); ``eigenvalues``
    ascend and live on the zero-mean subspace.
    """

    n: int
    r0: float
    H0: float
    c: float
    eigenvalues: tuple

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def stability_spectrum(n: int, r0: float, H0: float, Rg: float = 0.0,
                       N: int = 512, l_max: int = 6) -> StabilitySpectrum:
    """Assemble the discretized stability spectrum (Laplace eigenvalues
    minus the constant potential)."""
    c = stability_potential(n, r0, H0, Rg)
    lap = laplace_spectrum_axisymmetric(n, r0, l_max, N)
    return StabilitySpectrum(
        n=int(n), r0=float(r0), H0=float(H0), c=float(c),
        eigenvalues=tuple(float(v - c) for v in lap),
    )
