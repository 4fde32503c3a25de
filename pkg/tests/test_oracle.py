import math

import numpy as np
import pytest
from mpmath import mp, mpf, workdps

from ellipse_perimeter import (
    PrecisionConfig,
    elliptic_E,
    elliptic_E_mp,
    exact_perimeter,
    exact_perimeter_mp,
    make_axes,
)

from quadrature_oracle import elliptic_E_quadrature

# Golden constants, pinned from tanh-sinh quadrature of the integrand at 60
# decimal digits (see quadrature_oracle.py).
E_HALF_GOLDEN = "1.35064388104767550252017473534"
PERIMETER_1000_1_GOLDEN = "4000.01558810468824461075647366"


class TestPrecisionConfig:
    def test_defaults(self):
        cfg = PrecisionConfig()
        assert cfg.working_digits == 50
        assert cfg.tolerance == 1e-45

    def test_rejects_low_digits(self):
        with pytest.raises(ValueError):
            PrecisionConfig(working_digits=29)

    def test_rejects_loose_tolerance(self):
        with pytest.raises(ValueError):
            PrecisionConfig(working_digits=50, tolerance=1e-40)
        with pytest.raises(ValueError):
            PrecisionConfig(tolerance=-1e-50)

    def test_tight_tolerance_allowed(self):
        assert PrecisionConfig(tolerance=1e-50).tolerance == 1e-50


class TestEllipticE:
    def test_zero_parameter_is_half_pi(self):
        assert elliptic_E(0) == math.pi / 2

    def test_unit_parameter_is_one(self):
        assert elliptic_E(1) == 1.0

    def test_half_parameter_golden(self, cfg):
        with workdps(40):
            rel = abs(elliptic_E_mp(0.5, cfg) - mpf(E_HALF_GOLDEN)) / mpf(E_HALF_GOLDEN)
            assert rel < 1e-25
        assert math.isclose(elliptic_E(0.5), float(mpf(E_HALF_GOLDEN)), rel_tol=1e-15)

    @pytest.mark.parametrize("m", [-0.1, 1.0001, float("nan")])
    def test_rejects_out_of_range(self, m):
        with pytest.raises(ValueError):
            elliptic_E(m)

    def test_strictly_decreasing(self):
        grid = np.linspace(0.0, 1.0, 51)
        values = [elliptic_E(m) for m in grid]
        assert all(v1 > v2 for v1, v2 in zip(values, values[1:]))

    def test_bounds(self):
        for m in np.linspace(0.0, 1.0, 23):
            assert 1.0 <= elliptic_E(m) <= math.pi / 2

    def test_agrees_with_quadrature(self, cfg):
        # spot grid here; the acceptance suite runs the dense 100-point version
        with workdps(50):
            for m in np.linspace(0.0, 1.0, 13):
                agm = elliptic_E_mp(m, cfg)
                ref = elliptic_E_quadrature(m)
                assert abs(agm - ref) / ref < mpf("1e-20")

    def test_small_m_maclaurin(self, cfg):
        # E(m) = (pi/2)(1 - m/4 - 3 m^2/64 - 5 m^3/256 - ...)
        for m in np.geomspace(1e-8, 1e-3, 11):
            series = (math.pi / 2) * (1 - m / 4 - 3 * m**2 / 64 - 5 * m**3 / 256)
            assert math.isclose(elliptic_E(m, cfg), series, rel_tol=1e-12)


class TestExactPerimeter:
    def test_circle(self):
        assert math.isclose(exact_perimeter(make_axes(1, 1)), 2 * math.pi, rel_tol=1e-15)
        assert math.isclose(exact_perimeter(make_axes(2.5, 2.5)), 5 * math.pi, rel_tol=1e-15)

    def test_flat(self):
        assert exact_perimeter(make_axes(1, 0)) == 4.0
        assert exact_perimeter(make_axes(7, 0)) == 28.0

    def test_high_eccentricity_golden(self, cfg):
        with workdps(40):
            p = exact_perimeter_mp(make_axes(1000, 1), cfg)
            rel = abs(p - mpf(PERIMETER_1000_1_GOLDEN)) / mpf(PERIMETER_1000_1_GOLDEN)
            assert rel < 1e-25
        assert math.isclose(
            exact_perimeter(make_axes(1000, 1)), float(mpf(PERIMETER_1000_1_GOLDEN)), rel_tol=1e-15
        )

    def test_perimeter_sandwich(self, cfg):
        rng = np.random.default_rng(2024)
        for _ in range(40):
            a = float(rng.uniform(0.5, 200.0))
            b = a * float(rng.uniform(0.01, 0.999))
            p = exact_perimeter(make_axes(a, b), cfg)
            assert math.pi * (a + b) < p < math.pi * math.sqrt(2 * (a * a + b * b))
