"""Radial profile functions with first and second derivatives.

Every metric coefficient is a map ``r -> (f, f', f'')`` on a half-open
interval ``(r_lo, inf)``. Closed-form profiles wrap explicit callables;
tabulated profiles interpolate with a natural cubic spline. Products and
powers propagate derivatives by the chain rule, which keeps conformally
rescaled metrics exact (no re-sampling, no finite differences).
"""

from __future__ import annotations

from typing import Callable

import numpy as np
from scipy.interpolate import CubicSpline

__all__ = [
    "RadialFn",
    "ClosedFormRadialFn",
    "TabulatedRadialFn",
    "RadialProduct",
    "RadialPower",
    "constant_fn",
    "identity_fn",
]


class RadialFn:
    """Base interface: ``eval(r)`` returns the triple ``(f, f', f'')``.

    Accepts scalars or numpy arrays and evaluates elementwise.
    """

    def eval(self, r):
        raise NotImplementedError

    def value(self, r):
        return self.eval(r)[0]

    def deriv(self, r):
        return self.eval(r)[1]

    def deriv2(self, r):
        return self.eval(r)[2]

    def __call__(self, r):
        return self.value(r)


class ClosedFormRadialFn(RadialFn):
    """Profile given by explicit callables for f, f' and f''."""

    def __init__(self, f: Callable, df: Callable, d2f: Callable):
        self._f = f
        self._df = df
        self._d2f = d2f

    def eval(self, r):
        return self._f(r), self._df(r), self._d2f(r)


class TabulatedRadialFn(RadialFn):
    """Natural cubic-spline interpolant of tabulated samples.

    The derivative self-consistency invariants (centered differences of the
    spline agree with its reported derivatives) are the acceptance gate for
    user-supplied tables; they hold for any C^2 interpolant, so the natural
    end conditions are safe.
    """

    def __init__(self, r: np.ndarray, values: np.ndarray):
        r = np.asarray(r, dtype=float)
        values = np.asarray(values, dtype=float)
        if r.ndim != 1 or r.size < 4:
            raise ValueError("tabulated profile needs at least 4 samples")
        if not np.all(np.diff(r) > 0):
            raise ValueError("tabulated radii must be strictly increasing")
        self.r_lo = float(r[0])
        self.r_hi = float(r[-1])
        self._spline = CubicSpline(r, values, bc_type="natural")
        self._d1 = self._spline.derivative(1)
        self._d2 = self._spline.derivative(2)

    def eval(self, r):
        return self._spline(r), self._d1(r), self._d2(r)


class RadialProduct(RadialFn):
    """Pointwise product f*g with chain-rule derivatives."""

    def __init__(self, f: RadialFn, g: RadialFn):
        self._f = f
        self._g = g

    def eval(self, r):
        f, df, d2f = self._f.eval(r)
        g, dg, d2g = self._g.eval(r)
        return f * g, df * g + f * dg, d2f * g + 2.0 * df * dg + f * d2g


class RadialPower(RadialFn):
    """Pointwise power f**p (real exponent) with chain-rule derivatives."""

    def __init__(self, f: RadialFn, p: float):
        self._f = f
        self._p = float(p)

    def eval(self, r):
        p = self._p
        f, df, d2f = self._f.eval(r)
        fp = f**p
        dfp = p * f ** (p - 1.0) * df
        d2fp = p * (p - 1.0) * f ** (p - 2.0) * df * df + p * f ** (p - 1.0) * d2f
        return fp, dfp, d2fp


def constant_fn(c: float) -> RadialFn:
    c = float(c)
    return ClosedFormRadialFn(
        lambda r: c * np.ones_like(np.asarray(r, dtype=float)) if np.ndim(r) else c,
        lambda r: np.zeros_like(np.asarray(r, dtype=float)) if np.ndim(r) else 0.0,
        lambda r: np.zeros_like(np.asarray(r, dtype=float)) if np.ndim(r) else 0.0,
    )


def identity_fn() -> RadialFn:
    return ClosedFormRadialFn(
        lambda r: np.asarray(r, dtype=float) if np.ndim(r) else float(r),
        lambda r: np.ones_like(np.asarray(r, dtype=float)) if np.ndim(r) else 1.0,
        lambda r: np.zeros_like(np.asarray(r, dtype=float)) if np.ndim(r) else 0.0,
    )
