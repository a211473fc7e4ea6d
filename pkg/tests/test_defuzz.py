import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wablfuzz import (
    LevelRep,
    PiecewiseLinearMF,
    WablParams,
    centroid,
    level_add,
    median_of_maximum,
    singleton,
    to_level_rep,
    triangle,
    wabl_analytic,
    wabl_quadrature,
    weight_density,
)
from wablfuzz.errors import DegenerateInputError, DomainError, RangeError
from wablfuzz.scenarios import build_conditioner

from helpers import brute_centroid, level_reps, random_rep

SPEED = build_conditioner().output
MIDDLE = to_level_rep(SPEED.term("middle"))
LOWER = to_level_rep(SPEED.term("lower"))
HIGHER = to_level_rep(SPEED.term("higher"))
HALF = WablParams(0.5, 0.5, 2.0)

params_st = st.builds(
    WablParams.from_left, st.floats(0, 1), st.floats(0.2, 10)
)


class TestParams:
    def test_weights_must_sum_to_one(self):
        with pytest.raises(DomainError, match="sum to 1"):
            WablParams(0.5, 0.6, 2)

    @pytest.mark.parametrize("m", [0, -1, float("inf")])
    def test_exponent_positive(self, m):
        with pytest.raises(DomainError):
            WablParams(0.5, 0.5, m)

    def test_negative_weight(self):
        with pytest.raises(DomainError):
            WablParams(-0.1, 1.1, 2)


class TestWeightDensity:
    def test_uniform(self):
        assert weight_density(WablParams(m=1), 0.3) == 1.0

    def test_linear(self):
        assert weight_density(WablParams(m=2), 0.5) == 1.0

    def test_normalised(self):
        # midpoint rule after xi = u**2, which removes the singularity at 0
        p = WablParams(m=0.5)
        u = (np.arange(200) + 0.5) / 200
        total = sum(weight_density(p, float(v * v)) * 2 * v for v in u) / 200
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_singular_at_zero(self):
        with pytest.raises(RangeError):
            weight_density(WablParams(m=0.5), 0.0)
        assert weight_density(WablParams(m=3), 0.0) == 0.0

    @pytest.mark.parametrize("xi", [-0.1, 1.1])
    def test_domain(self, xi):
        with pytest.raises(DomainError):
            weight_density(HALF, xi)


class TestWablAnalytic:
    @pytest.mark.parametrize("m", [0.5, 1, 2, 5])
    def test_middle_speed_symmetric(self, m):
        assert wabl_analytic(MIDDLE, WablParams(0.5, 0.5, m)) == pytest.approx(400.0, abs=1e-9)

    def test_higher_speed(self):
        # 1000 - 200 * 0.5 * 7/3
        assert wabl_analytic(HIGHER, HALF) == pytest.approx(2300 / 3, abs=1e-9)
        assert wabl_analytic(HIGHER, HALF) == pytest.approx(wabl_quadrature(HIGHER, HALF, 100_000), abs=1e-6)

    def test_lower_speed(self):
        assert wabl_analytic(LOWER, HALF) == pytest.approx(400 / 3, abs=1e-9)
        assert wabl_analytic(LOWER, HALF) == pytest.approx(wabl_quadrature(LOWER, HALF, 100_000), abs=1e-6)

    @given(level_reps(), params_st)
    def test_within_support(self, rep, params):
        lo, hi = rep.support
        assert lo - 1e-9 <= wabl_analytic(rep, params) <= hi + 1e-9

    @given(level_reps(), level_reps(), params_st)
    def test_additive(self, a, b, params):
        total = wabl_analytic(level_add(a, b), params)
        assert total == pytest.approx(wabl_analytic(a, params) + wabl_analytic(b, params), abs=1e-9)

    @given(level_reps(), st.floats(0.2, 10), st.lists(st.floats(0, 1), min_size=2, max_size=6))
    def test_nonincreasing_in_c_left(self, rep, m, cs):
        values = [wabl_analytic(rep, WablParams.from_left(c, m)) for c in sorted(cs)]
        assert all(b <= a + 1e-9 for a, b in zip(values, values[1:]))

    @given(st.floats(-100, 100), st.floats(0, 50), st.floats(0, 50), st.floats(0.1, 20))
    def test_symmetric_gives_centre(self, s, spread, core, m):
        rep = LevelRep.from_trapezoid(s - core - spread, s - core, s + core, s + core + spread)
        assert wabl_analytic(rep, WablParams(0.5, 0.5, m)) == pytest.approx(s, abs=1e-9)

    def test_crisp(self):
        rep = to_level_rep(singleton(42.0, (0, 100)))
        assert wabl_analytic(rep, WablParams(0.3, 0.7, 0.4)) == 42.0


class TestQuadrature:
    def test_middle(self):
        assert wabl_quadrature(MIDDLE, HALF, 10_000) == pytest.approx(400.0, abs=1e-6)

    def test_higher(self):
        assert wabl_quadrature(HIGHER, HALF, 10_000) == pytest.approx(766.667, abs=1e-2)

    @pytest.mark.parametrize("params", [HALF, WablParams(0.1, 0.9, 0.3), WablParams(1, 0, 7)])
    def test_singleton_exact(self, params):
        assert wabl_quadrature(LevelRep.crisp(42.0), params, 16) == pytest.approx(42.0, abs=1e-12)

    def test_min_nodes(self):
        with pytest.raises(DomainError):
            wabl_quadrature(MIDDLE, HALF, 8)

    @pytest.mark.parametrize("m", [1.0, 2.0, 3.0, 5.0])
    def test_two_coordinates_agree(self, m):
        p = WablParams(0.3, 0.7, m)
        assert wabl_quadrature(HIGHER, p, 100_000, "level") == pytest.approx(
            wabl_quadrature(HIGHER, p, 100_000, "cdf"), abs=1e-4
        )

    def test_level_coordinate_struggles_below_one(self):
        # documents why the cdf coordinate is the default oracle
        p = WablParams(0.5, 0.5, 0.2)
        exact = wabl_analytic(HIGHER, p)
        assert abs(wabl_quadrature(HIGHER, p, 100_000, "level") - exact) > 1.0
        assert abs(wabl_quadrature(HIGHER, p, 100_000, "cdf") - exact) < 1e-3

    def test_oracle_agreement_random(self):
        rng = np.random.default_rng(20240501)
        for _ in range(500):
            rep = random_rep(rng)
            params = WablParams.from_left(float(rng.uniform(0, 1)), float(rng.uniform(0.2, 10)))
            lo, hi = rep.support
            width = max(hi - lo, 1.0)
            assert abs(wabl_analytic(rep, params) - wabl_quadrature(rep, params, 100_000)) < 1e-4 * width


class TestExponentLimits:
    def test_large_m_goes_to_core_mix(self):
        rep = LevelRep.from_trapezoid(0, 10, 20, 60)
        p = WablParams(0.3, 0.7, 1e4)
        assert wabl_analytic(rep, p) == pytest.approx(0.3 * 10 + 0.7 * 20, abs=1e-2)

    def test_small_m_goes_to_support_mix(self):
        rep = LevelRep.from_trapezoid(0, 10, 20, 60)
        p = WablParams(0.3, 0.7, 1e-4)
        assert wabl_analytic(rep, p) == pytest.approx(0.3 * 0 + 0.7 * 60, abs=1e-2)


class TestCentroid:
    def test_symmetric_triangle(self):
        assert centroid(triangle(200, 400, 600, (0, 1000))) == pytest.approx(400.0, abs=1e-12)

    def test_skewed_triangle(self):
        assert centroid(triangle(0, 1, 3)) == pytest.approx(4 / 3, abs=1e-12)

    @pytest.mark.parametrize("term", ["lower", "middle", "higher"])
    def test_speed_terms_against_dense_grid(self, term):
        mf = SPEED.term(term)
        assert centroid(mf) == pytest.approx(brute_centroid(mf), abs=1e-6)

    def test_lower_speed_value(self):
        # (200*100 + 100*(200 + 200/3)) / 300
        assert centroid(SPEED.term("lower")) == pytest.approx(1400 / 9, abs=1e-9)

    @given(st.floats(-100, 100), st.floats(0.1, 50), st.floats(0.1, 50))
    def test_triangle_formula(self, a, d1, d2):
        mo, b = a + d1, a + d1 + d2
        assert centroid(triangle(a, mo, b)) == pytest.approx((a + mo + b) / 3, abs=1e-9)

    def test_zero_area(self):
        with pytest.raises(DegenerateInputError):
            centroid(singleton(1.0, (0, 2)))


class TestMedianOfMaximum:
    def test_lower_speed(self):
        assert median_of_maximum(SPEED.term("lower")) == 100.0

    def test_middle_speed(self):
        assert median_of_maximum(SPEED.term("middle")) == 400.0

    def test_higher_speed(self):
        assert median_of_maximum(SPEED.term("higher")) == 800.0

    def test_trapezoid(self):
        mf = PiecewiseLinearMF(((0, 0), (2, 1), (5, 1), (6, 0)), (0, 6))
        assert median_of_maximum(mf) == 3.5


class TestCentroidCoincidence:
    @pytest.mark.parametrize("tri", [(0, 1, 3), (200, 400, 600), (-7, 5, 6)])
    def test_m_half_confirmed_by_quadrature(self, tri):
        rep = LevelRep.from_triangle(*tri)
        q = wabl_quadrature(rep, WablParams(0.5, 0.5, 0.5), 100_000)
        assert q == pytest.approx(sum(tri) / 3, abs=1e-6)

    @given(st.floats(-100, 100), st.floats(0, 50), st.floats(0, 50))
    @settings(max_examples=200)
    def test_triangles(self, a, d1, d2):
        mo, b = a + d1, a + d1 + d2
        rep = LevelRep.from_triangle(a, mo, b)
        assert wabl_analytic(rep, WablParams(0.5, 0.5, 0.5)) == pytest.approx((a + mo + b) / 3, abs=1e-9)
