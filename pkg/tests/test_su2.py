import math

import numpy as np
import pytest

from sl2geo import (c_of_omega, landing_match_error, reachable_boundary,
                    su2_landing_point, su2_landing_time, su2_planar_geodesic)
from sl2geo.errors import BadGridError
from sl2geo.su2 import _su2_from_kernel

TWO_OVER_SQRT3 = 2.0 / math.sqrt(3.0)


class TestPlanarGeodesic:
    def test_zero_parameter_runs_along_axis(self):
        for s in np.linspace(0.0, math.pi, 20):
            x, y = su2_planar_geodesic(0.0, float(s))
            assert x == pytest.approx(math.cos(s), abs=1e-14)
            assert y == pytest.approx(0.0, abs=1e-14)
        # traverses from (1, 0) to (-1, 0)
        assert su2_planar_geodesic(0.0, math.pi)[0] == pytest.approx(-1.0, abs=1e-14)

    def test_starts_at_one_zero(self, rng):
        for omega in rng.uniform(-6.0, 6.0, 20):
            assert su2_planar_geodesic(float(omega), 0.0) == (1.0, 0.0)

    def test_lands_on_circle(self, rng):
        for omega in rng.uniform(-6.0, 6.0, 20):
            x, y = su2_planar_geodesic(float(omega), su2_landing_time(float(omega)))
            assert x * x + y * y == pytest.approx(1.0, abs=1e-12)
            lx, ly = su2_landing_point(float(omega))
            assert (x, y) == pytest.approx((lx, ly), abs=1e-12)

    def test_stays_inside_disc(self, rng):
        for _ in range(200):
            omega = rng.uniform(-8.0, 8.0)
            s = rng.uniform(0.0, math.pi)
            x, y = su2_planar_geodesic(omega, s)
            assert x * x + y * y <= 1.0 + 1e-12

    def test_reflection_symmetry(self, rng):
        for _ in range(50):
            omega = rng.uniform(-5.0, 5.0)
            s = rng.uniform(0.0, 3.0)
            x1, y1 = su2_planar_geodesic(omega, s)
            x2, y2 = su2_planar_geodesic(-omega, s)
            assert x2 == pytest.approx(x1, abs=1e-13)
            assert y2 == pytest.approx(-y1, abs=1e-13)

    def test_matches_shared_kernel_route(self, rng):
        # The direct trigonometric formula against the same point computed
        # through the analytic continuation of the planar-family kernel.
        for _ in range(100):
            omega = rng.uniform(-5.0, 5.0)
            s = rng.uniform(0.0, math.pi)
            direct = su2_planar_geodesic(omega, s)
            kernel = _su2_from_kernel(omega, s)
            assert direct == pytest.approx(kernel, abs=1e-9)


class TestParameterBridge:
    def test_value_at_zero(self):
        assert c_of_omega(0.0) == pytest.approx(-TWO_OVER_SQRT3, abs=1e-12)

    def test_branch_ranges(self):
        for omega in (0.1, 1.0, 4.0):
            assert c_of_omega(omega) < -TWO_OVER_SQRT3 + 1e-12
        for omega in (-0.1, -1.0, -4.0):
            assert c_of_omega(omega) > TWO_OVER_SQRT3 - 1e-12

    def test_monotone_decreasing_per_branch(self):
        grid = np.linspace(0.0, 8.0, 200)
        values = [c_of_omega(float(w)) for w in grid]
        assert all(b < a for a, b in zip(values, values[1:]))
        grid = np.linspace(-8.0, -1e-9, 200)
        values = [c_of_omega(float(w)) for w in grid]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_diverges_for_large_omega(self):
        assert c_of_omega(1.0e6) < -1.0e3
        assert c_of_omega(-1.0e6) > 1.0e3

    def test_landing_match(self):
        assert landing_match_error(0.0) <= 1e-12  # both land at (-1, 0)
        assert landing_match_error(1.0) <= 1e-9
        assert landing_match_error(-2.5) <= 1e-9
        for omega in np.linspace(-5.0, 5.0, 100):
            assert landing_match_error(float(omega)) <= 1e-9


class TestReachableBoundary:
    def test_small_time_stays_near_start(self):
        pts = reachable_boundary(0.05, 64)
        for x, y in pts:
            assert math.hypot(x - 1.0, y) < 0.2

    def test_points_inside_closed_disc(self):
        for s in (0.3, 1.0, 2.0, 3.5):
            for x, y in reachable_boundary(s, 128):
                assert x * x + y * y <= 1.0 + 1e-9

    def test_landed_parameters_clip_to_circle(self):
        # At s >= pi every geodesic has landed: all samples on the circle.
        for x, y in reachable_boundary(math.pi, 64):
            assert x * x + y * y == pytest.approx(1.0, abs=1e-9)

    def test_bad_grid(self):
        with pytest.raises(BadGridError):
            reachable_boundary(1.0, 1)
        with pytest.raises(BadGridError):
            reachable_boundary(0.0, 16)
