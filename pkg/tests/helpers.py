"""Random fuzzy-number generators and brute-force oracles shared by the tests.

Nothing here calls the analytic WABL path; the oracles only use mf_eval or
plain numerical integration.
"""
from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from wablfuzz import LevelRep, PiecewiseLinearMF, to_level_rep


def _mf_from_parts(xs, rise, fall, plateau, universe):
    mus = list(rise) + [1.0] * plateau + list(fall)
    return PiecewiseLinearMF(tuple(zip(xs, mus)), universe)


@st.composite
def mfs(draw, max_side=3):
    """Normal quasi-concave MFs, including plateaus, jumps and open shoulders."""
    n_rise = draw(st.integers(0, max_side))
    n_fall = draw(st.integers(0, max_side))
    plateau = draw(st.integers(1, 2))
    if n_rise + n_fall == 0:
        plateau = 2  # one lone breakpoint would be a crisp singleton
    n = n_rise + plateau + n_fall
    width = draw(st.sampled_from([1.0, 10.0, 60.0, 1000.0]))
    offset = draw(st.sampled_from([0.0, -50.0, 200.0]))
    ticks = sorted(draw(st.lists(st.integers(1, 999), min_size=n, max_size=n, unique=True)))
    xs = [offset + width * t / 1000.0 for t in ticks]
    level = st.one_of(st.sampled_from([0.0, 0.25, 0.5, 0.75]), st.floats(0.0, 0.99))
    rise = sorted(draw(st.lists(level, min_size=n_rise, max_size=n_rise)))
    fall = sorted(draw(st.lists(level, min_size=n_fall, max_size=n_fall)), reverse=True)
    return _mf_from_parts(xs, rise, fall, plateau, (offset, offset + width))


def level_reps(max_side=3):
    return mfs(max_side).map(to_level_rep)


def random_mf(rng: np.random.Generator, max_side: int = 3) -> PiecewiseLinearMF:
    n_rise, n_fall = rng.integers(0, max_side + 1, size=2)
    plateau = int(rng.integers(1, 3))
    if n_rise + n_fall == 0:
        plateau = 2
    n = int(n_rise + plateau + n_fall)
    width = float(rng.choice([1.0, 10.0, 60.0, 1000.0]))
    offset = float(rng.choice([0.0, -50.0, 200.0]))
    ticks = np.sort(rng.choice(np.arange(1, 1000), size=n, replace=False))
    xs = [offset + width * t / 1000.0 for t in ticks]
    def levels(k):
        v = rng.uniform(0.0, 0.99, size=k)
        # sometimes snap to a shared level so plateaus below 1 appear
        v[rng.uniform(size=k) < 0.3] = 0.5
        return v
    rise = np.sort(levels(n_rise))
    fall = np.sort(levels(n_fall))[::-1]
    return _mf_from_parts(xs, rise, fall, plateau, (offset, offset + width))


def random_rep(rng: np.random.Generator) -> LevelRep:
    return to_level_rep(random_mf(rng))


def random_triangle(rng: np.random.Generator) -> tuple[float, float, float]:
    a, mo, b = np.sort(rng.uniform(-500.0, 1500.0, size=3))
    return float(a), float(mo), float(b)


def random_trapezoid(rng: np.random.Generator) -> tuple[float, float, float, float]:
    return tuple(float(v) for v in np.sort(rng.uniform(-500.0, 1500.0, size=4)))


def brute_cut(mf: PiecewiseLinearMF, xi: float, n: int = 200_001) -> tuple[float, float]:
    """Level cut {x : mu(x) >= xi} found by scanning a dense grid of the universe."""
    lo, hi = mf.universe
    xs = np.linspace(lo, hi, n)
    mu = np.interp(xs, mf.xs, mf.mus)
    inside = xs[mu >= xi - 1e-12]
    return float(inside.min()), float(inside.max())


def brute_centroid(mf: PiecewiseLinearMF, n: int = 400_001) -> float:
    lo, hi = mf.universe
    xs = np.linspace(lo, hi, n)
    mu = np.interp(xs, mf.xs, mf.mus)
    return float(np.trapezoid(xs * mu, xs) / np.trapezoid(mu, xs))


def bisect_root(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    flo = f(lo)
    assert flo * f(hi) <= 0, "no sign change on bracket"
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)
