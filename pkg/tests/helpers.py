"""Shared grids and oracles for the test suite."""

from staticgeo import metrics

DIMS = (3, 4, 5, 6, 7)
MASSES = (-0.5, 0.0, 1.0, 2.0)

# Radii multipliers for equality-case checks; kept moderate so that the
# compared values stay small enough for absolute 1e-10 slack assertions.
EQUALITY_FACTORS = (1.05, 1.5, 2.2, 3.5, 6.0)


def schwarzschild_grid():
    for n in DIMS:
        for m in MASSES:
            yield n, m, metrics.schwarzschild(n, m)


def equality_radii(g):
    scale = max(g.r_min, 1.0)
    return [c * scale for c in EQUALITY_FACTORS]


def fd1(f, r, h):
    return (f(r + h) - f(r - h)) / (2.0 * h)
