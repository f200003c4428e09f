"""Numba availability and kernel-path selection.

Hot inner loops (the flow time steppers in :mod:`staticgeo._kernels`) exist
in two variants: a scalar-loop form compiled with ``numba.njit`` and a
vectorized pure-numpy form. The active path is chosen once at import:

* ``STATICGEO_NUMBA=0`` (or ``false``/``off``/``no``) forces the numpy path;
* ``STATICGEO_NUMBA=1`` (or ``true``/``on``/``yes``) requires numba and
  raises if it cannot be imported;
* unset or ``auto``: use numba when importable, numpy otherwise.

``benchmarks/bench_kernels.py`` times both paths side by side.
"""

import os

__all__ = ["HAVE_NUMBA", "USING_NUMBA", "jit_kernel"]

_REQUESTED = os.environ.get("STATICGEO_NUMBA", "auto").strip().lower()

try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:
    _njit = None
    HAVE_NUMBA = False

if _REQUESTED in ("0", "false", "off", "no"):
    USING_NUMBA = False
elif _REQUESTED in ("1", "true", "on", "yes"):
    if not HAVE_NUMBA:
        raise ImportError(
            "STATICGEO_NUMBA requested the numba kernel path but numba is "
            "not importable; install numba or unset STATICGEO_NUMBA"
        )
    USING_NUMBA = True
else:
    USING_NUMBA = HAVE_NUMBA


def jit_kernel(fn):
    """Compile ``fn`` with numba when available; otherwise return ``None``.

    Callers keep the pure-python/numpy variant alongside and dispatch on
    :data:`USING_NUMBA`, so both paths stay importable and benchmarkable.
    """
    if not HAVE_NUMBA:
        return None
    return _njit(cache=True)(fn)
