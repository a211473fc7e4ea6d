"""Piecewise-linear fuzzy sets in membership form and in level (LR) form.

A membership function is stored as ordered ``(x, mu)`` breakpoints over a
closed universe.  Outside the first/last breakpoint the boundary degree is
extended constantly up to the universe edge, so ``[(12, 1), (20, 0)]`` over
``[0, 60]`` reads as "1 for t <= 12, falling to 0 at 20, 0 afterwards".

The level form describes the same set by its level cuts
``A^xi = [L(xi), R(xi)]``.  ``L`` and ``R`` are piecewise linear in ``xi`` and
may jump where the membership function has a plateau below 1; at a jump the
function takes its left limit, which is what the closed-cut definition
``L(xi) = min{x : mu(x) >= xi}`` gives.  ``L(0)`` and ``R(0)`` are the ends of
the closure of the support.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, RepresentationError

# breakpoint tolerance in universe units
X_TOL = 1e-9
_MU_TOL = 1e-12


@dataclass(frozen=True)
class PiecewiseLinearMF:
    """Normal, quasi-concave membership function given by breakpoints.

    A single breakpoint ``[(x0, 1)]`` is the crisp singleton at ``x0``
    (degree 1 there, 0 elsewhere) rather than a constant function.
    """

    points: tuple[tuple[float, float], ...]
    universe: tuple[float, float]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        pts = tuple((float(x), float(mu)) for x, mu in self.points)
        lo, hi = (float(v) for v in self.universe)
        label = self.name or "membership function"
        if not lo < hi:
            raise RepresentationError(f"{label}: universe [{lo}, {hi}] is empty")
        if not pts:
            raise RepresentationError(f"{label}: no breakpoints")
        xs = [x for x, _ in pts]
        if any(not np.isfinite(v) for v in xs):
            raise RepresentationError(f"{label}: non-finite breakpoint")
        for a, b in zip(xs, xs[1:]):
            if not b - a > X_TOL:
                raise RepresentationError(
                    f"{label}: breakpoints must be strictly increasing (got {a} then {b})"
                )
        if xs[0] < lo - X_TOL or xs[-1] > hi + X_TOL:
            raise RepresentationError(
                f"{label}: breakpoints [{xs[0]}, {xs[-1]}] leave universe [{lo}, {hi}]"
            )
        mus = []
        for _, mu in pts:
            if not -_MU_TOL <= mu <= 1 + _MU_TOL:
                raise RepresentationError(f"{label}: degree {mu} outside [0, 1]")
            mu = min(max(mu, 0.0), 1.0)
            if mu > 1 - _MU_TOL:
                mu = 1.0
            mus.append(mu)
        if max(mus) < 1.0:
            raise RepresentationError(
                f"{label}: not normal (max degree {max(mus)} < 1)"
            )
        first = mus.index(1.0)
        last = len(mus) - 1 - mus[::-1].index(1.0)
        rising = mus[: first + 1]
        falling = mus[last:]
        core = mus[first : last + 1]
        if (
            any(b < a for a, b in zip(rising, rising[1:]))
            or any(b > a for a, b in zip(falling, falling[1:]))
            or any(mu < 1.0 for mu in core)
        ):
            raise RepresentationError(f"{label}: not quasi-concave")
        object.__setattr__(self, "points", tuple(zip(xs, mus)))
        object.__setattr__(self, "universe", (lo, hi))

    @property
    def xs(self) -> tuple[float, ...]:
        return tuple(x for x, _ in self.points)

    @property
    def mus(self) -> tuple[float, ...]:
        return tuple(mu for _, mu in self.points)

    @property
    def is_singleton(self) -> bool:
        return len(self.points) == 1

    def __call__(self, x: float) -> float:
        return mf_eval(self, x)


def mf_eval(mf: PiecewiseLinearMF, x: float) -> float:
    """Degree of membership of ``x``; raises DomainError outside the universe."""
    lo, hi = mf.universe
    if not lo - X_TOL <= x <= hi + X_TOL:
        label = mf.name or "value"
        raise DomainError(f"{label}: {x} is outside the universe [{lo}, {hi}]")
    pts = mf.points
    if len(pts) == 1:
        return 1.0 if abs(x - pts[0][0]) <= X_TOL else 0.0
    xs = mf.xs
    if x <= xs[0]:
        return pts[0][1]
    if x >= xs[-1]:
        return pts[-1][1]
    k = bisect.bisect_right(xs, x)
    (x0, m0), (x1, m1) = pts[k - 1], pts[k]
    return m0 + (m1 - m0) * (x - x0) / (x1 - x0)


def triangle(a: float, mode: float, b: float, universe: Sequence[float] | None = None,
             name: str = "") -> PiecewiseLinearMF:
    if not a < mode < b:
        raise RepresentationError(f"triangle needs a < mode < b, got ({a}, {mode}, {b})")
    universe = tuple(universe) if universe is not None else (a, b)
    return PiecewiseLinearMF(((a, 0.0), (mode, 1.0), (b, 0.0)), universe, name)


def trapezoid(a: float, b: float, c: float, d: float,
              universe: Sequence[float] | None = None, name: str = "") -> PiecewiseLinearMF:
    if not a < b < c < d:
        raise RepresentationError(f"trapezoid needs a < b < c < d, got ({a}, {b}, {c}, {d})")
    universe = tuple(universe) if universe is not None else (a, d)
    return PiecewiseLinearMF(((a, 0.0), (b, 1.0), (c, 1.0), (d, 0.0)), universe, name)


def singleton(x0: float, universe: Sequence[float] | None = None, name: str = "") -> PiecewiseLinearMF:
    universe = tuple(universe) if universe is not None else (x0 - 1.0, x0 + 1.0)
    return PiecewiseLinearMF(((x0, 1.0),), universe, name)


@dataclass(frozen=True)
class LevelFunction:
    """Piecewise-linear function of the level ``xi`` on [0, 1].

    ``knots`` are ``(xi, y)`` pairs with nondecreasing ``xi`` from 0 to 1.  Two
    knots sharing a ``xi`` encode a jump; evaluation returns the left limit.
    """

    knots: tuple[tuple[float, float], ...]

    def __post_init__(self):
        knots = _collapse(tuple((float(a), float(b)) for a, b in self.knots))
        xis = [k[0] for k in knots]
        if not knots or xis[0] != 0.0 or xis[-1] != 1.0:
            raise RepresentationError("level function knots must span xi in [0, 1]")
        if any(b < a for a, b in zip(xis, xis[1:])):
            raise RepresentationError("level function knots must be ordered in xi")
        object.__setattr__(self, "knots", knots)

    @classmethod
    def affine(cls, intercept: float, slope: float = 0.0) -> "LevelFunction":
        return cls(((0.0, intercept), (1.0, intercept + slope)))

    @property
    def xis(self) -> tuple[float, ...]:
        return tuple(k[0] for k in self.knots)

    @property
    def ys(self) -> tuple[float, ...]:
        return tuple(k[1] for k in self.knots)

    def segments(self) -> Iterable[tuple[float, float, float, float]]:
        """Yield ``(xi0, xi1, y0, y1)`` for every segment of positive length."""
        for (a0, y0), (a1, y1) in zip(self.knots, self.knots[1:]):
            if a1 > a0:
                yield a0, a1, y0, y1

    def __call__(self, xi: float) -> float:
        xis = self.xis
        k = bisect.bisect_left(xis, xi)
        if k == 0:
            return self.knots[0][1]
        if k == len(xis):
            return self.knots[-1][1]
        (a0, y0), (a1, y1) = self.knots[k - 1], self.knots[k]
        return y0 + (y1 - y0) * (xi - a0) / (a1 - a0)

    def right_limit(self, xi: float) -> float:
        xis = self.xis
        k = bisect.bisect_right(xis, xi)
        if k == 0:
            return self.knots[0][1]
        if k == len(xis):
            return self.knots[-1][1]
        (a0, y0), (a1, y1) = self.knots[k - 1], self.knots[k]
        return y0 + (y1 - y0) * (xi - a0) / (a1 - a0)

    def evaluate(self, xi: np.ndarray) -> np.ndarray:
        """Vectorised left-limit evaluation."""
        xi = np.asarray(xi, dtype=float)
        xis = np.asarray(self.xis)
        ys = np.asarray(self.ys)
        k = np.clip(np.searchsorted(xis, xi, side="left"), 1, len(xis) - 1)
        a0, a1 = xis[k - 1], xis[k]
        y0, y1 = ys[k - 1], ys[k]
        width = np.where(a1 > a0, a1 - a0, 1.0)
        t = np.clip((xi - a0) / width, 0.0, 1.0)
        out = y0 + (y1 - y0) * t
        return np.where(xi <= xis[0], ys[0], out)

    def __neg__(self) -> "LevelFunction":
        return LevelFunction(tuple((a, -y) for a, y in self.knots))


def _collapse(knots: tuple[tuple[float, float], ...]) -> tuple[tuple[float, float], ...]:
    # keep first and last knot of every run sharing a xi; no jump allowed at xi = 1
    out: list[tuple[float, float]] = []
    i = 0
    while i < len(knots):
        j = i
        while j + 1 < len(knots) and knots[j + 1][0] == knots[i][0]:
            j += 1
        out.append(knots[i])
        if j > i and knots[j][1] != knots[i][1]:
            out.append(knots[j])
        i = j + 1
    if len(out) >= 2 and out[-1][0] == out[-2][0]:
        out.pop()
    if len(out) == 1:
        out.append((1.0, out[0][1]))
    return tuple(out)


@dataclass(frozen=True)
class LevelRep:
    """Level-cut form ``[L(xi), R(xi)]`` of a fuzzy number."""

    left: LevelFunction
    right: LevelFunction

    def __post_init__(self):
        lys, rys = self.left.ys, self.right.ys
        if any(b < a - X_TOL for a, b in zip(lys, lys[1:])):
            raise RepresentationError("left side must be nondecreasing in xi")
        if any(b > a + X_TOL for a, b in zip(rys, rys[1:])):
            raise RepresentationError("right side must be nonincreasing in xi")
        if self.left(1.0) > self.right(1.0) + X_TOL:
            raise RepresentationError(
                f"empty core: L(1) = {self.left(1.0)} > R(1) = {self.right(1.0)}"
            )

    @classmethod
    def from_triangle(cls, a: float, mode: float, b: float) -> "LevelRep":
        return cls(LevelFunction(((0.0, a), (1.0, mode))), LevelFunction(((0.0, b), (1.0, mode))))

    @classmethod
    def from_trapezoid(cls, a: float, b: float, c: float, d: float) -> "LevelRep":
        return cls(LevelFunction(((0.0, a), (1.0, b))), LevelFunction(((0.0, d), (1.0, c))))

    @classmethod
    def crisp(cls, x0: float) -> "LevelRep":
        return cls(LevelFunction.affine(x0), LevelFunction.affine(x0))

    def cut(self, xi: float) -> tuple[float, float]:
        return self.left(xi), self.right(xi)

    @property
    def support(self) -> tuple[float, float]:
        return self.left(0.0), self.right(0.0)

    @property
    def core(self) -> tuple[float, float]:
        return self.left(1.0), self.right(1.0)

    @property
    def breakpoints(self) -> tuple[float, ...]:
        return tuple(sorted(set(self.left.xis) | set(self.right.xis)))

    def membership(self, x: float) -> float:
        """Rebuild the membership degree from the level cuts: sup{xi : x in A^xi}."""
        return min(_sup_level(self.left, x, rising=True), _sup_level(self.right, x, rising=False))

    def __add__(self, other: "LevelRep") -> "LevelRep":
        return level_add(self, other)


def _sup_level(f: LevelFunction, x: float, rising: bool) -> float:
    sign = 1.0 if rising else -1.0
    # work with a nondecreasing function g = sign * f and target sign * x
    target = sign * x
    if sign * f.knots[0][1] > target + X_TOL:
        return 0.0
    best = 0.0
    for (a0, y0), (a1, y1) in zip(f.knots, f.knots[1:]):
        g0, g1 = sign * y0, sign * y1
        if g1 <= target + X_TOL:
            best = max(best, a1)
        elif g0 <= target:
            if a1 > a0:
                best = max(best, a0 + (target - g0) / (g1 - g0) * (a1 - a0))
            else:
                best = max(best, a0)
    return best


def _rising_side(pts: Sequence[tuple[float, float]], edge: float) -> LevelFunction:
    # pts: nondecreasing degrees ending at 1; edge: universe end on this side
    knots: list[tuple[float, float]] = []
    x0, mu0 = pts[0]
    if mu0 > 0.0:
        knots += [(0.0, edge), (mu0, edge), (mu0, x0)]
        start = 0
    else:
        start = max(i for i, (_, mu) in enumerate(pts) if mu == 0.0)
        knots.append((0.0, pts[start][0]))
    for (_, m0), (x1, m1) in zip(pts[start:], pts[start + 1 :]):
        knots.append((m1 if m1 > m0 else m0, x1))
    return LevelFunction(tuple(knots))


def to_level_rep(mf: PiecewiseLinearMF) -> LevelRep:
    """Invert the rising and falling sides of ``mf`` into ``L`` and ``R``.

    >>> rep = to_level_rep(triangle(200, 400, 600, (0, 1000)))
    >>> rep.left.knots, rep.right.knots
    (((0.0, 200.0), (1.0, 400.0)), ((0.0, 600.0), (1.0, 400.0)))
    """
    pts = mf.points
    lo, hi = mf.universe
    if mf.is_singleton:
        return LevelRep.crisp(pts[0][0])
    mus = mf.mus
    first = mus.index(1.0)
    last = len(mus) - 1 - mus[::-1].index(1.0)
    left = _rising_side(pts[: first + 1], lo)
    mirrored = [(-x, mu) for x, mu in reversed(pts[last:])]
    right = -_rising_side(mirrored, -hi)
    return LevelRep(left, right)


def level_add(a: LevelRep, b: LevelRep) -> LevelRep:
    """Level-wise interval sum: ``[La + Lb, Ra + Rb]`` on the union of breakpoints."""
    return LevelRep(_add_fn(a.left, b.left), _add_fn(a.right, b.right))


def _add_fn(f: LevelFunction, g: LevelFunction) -> LevelFunction:
    knots: list[tuple[float, float]] = []
    for xi in sorted(set(f.xis) | set(g.xis)):
        left = f(xi) + g(xi)
        right = f.right_limit(xi) + g.right_limit(xi)
        knots.append((xi, left))
        if right != left:
            knots.append((xi, right))
    return LevelFunction(tuple(knots))
