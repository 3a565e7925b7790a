"""Kernel identity and stability tests for the special functions.

Pinned expected values were computed independently with mpmath at 30
significant digits (coth/sinh/besseli closed forms and direct formula
evaluation).
"""

import math

import numpy as np
import pytest
from scipy import special as sp

from spinlandauer.specfun import (
    bessel_i,
    bessel_ratio,
    brillouin,
    langevin,
    log_gamma,
    log_sinh_ratio,
    log_sphere_area,
    sphere_area,
)

# mpmath oracles, 30 digits
LANGEVIN_AT_10 = 0.90000000412230725
LANGEVIN_AT_1 = 0.3130352854993313
LANGEVIN_AT_3 = 0.67163648998035584
LANGEVIN_AT_1EM4 = 3.3333333311111111e-5
LANGEVIN_AT_5EM4 = 0.00016666666388888896
BRILLOUIN_1_AT_07 = 0.43219980492239837
BRILLOUIN_25_AT_1EM4 = 4.6666666620622222e-5
BRILLOUIN_5_AT_32 = 0.77883461679471031
LOG_SINH_RATIO_15_AT_2 = 2.3011383011206929
I_HALF_AT_2 = 2.046236863089055
I_3HALF_AT_2 = 1.0994731886331097
IVE_0_AT_700 = 0.015081295651531358
IVE_25_AT_1E4 = 0.0039882260968558066
RATIO_2_AT_1E4 = 0.99975001875187511


class TestLangevin:
    def test_zero(self):
        assert langevin(0.0) == 0.0

    @pytest.mark.parametrize(
        "x,expected",
        [
            (10.0, LANGEVIN_AT_10),
            (1.0, LANGEVIN_AT_1),
            (3.0, LANGEVIN_AT_3),
            (1e-4, LANGEVIN_AT_1EM4),
            (5e-4, LANGEVIN_AT_5EM4),
        ],
    )
    def test_pinned_values(self, x, expected):
        assert langevin(x) == pytest.approx(expected, rel=1e-12, abs=1e-15)

    def test_odd_and_bounded(self):
        for x in np.linspace(0.01, 50.0, 97):
            assert langevin(-x) == -langevin(x)
            assert -1.0 < langevin(x) < 1.0

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            langevin(math.inf)
        with pytest.raises(ValueError):
            langevin(math.nan)


class TestBrillouin:
    def test_zero_for_any_spin(self):
        for s in (0.5, 1.0, 2.5, 100.0):
            assert brillouin(s, 0.0) == 0.0

    def test_tanh_identity_spin_half(self):
        # B_{1/2}(x) = tanh(x), from 2 coth(2x) - coth(x) = tanh(x)
        for x in np.linspace(-20.0, 20.0, 161):
            assert brillouin(0.5, x) == pytest.approx(math.tanh(x), abs=1e-12)

    @pytest.mark.parametrize(
        "s,x,expected",
        [
            (1.0, 0.7, BRILLOUIN_1_AT_07),
            (2.5, 1e-4, BRILLOUIN_25_AT_1EM4),
            (5.0, 3.2, BRILLOUIN_5_AT_32),
        ],
    )
    def test_pinned_values(self, s, x, expected):
        assert brillouin(s, x) == pytest.approx(expected, rel=1e-12)

    def test_classical_limit(self):
        # |B_s - L| <= 1/s for s >= 10
        for s in (10.0, 100.0, 1e4, 1e6):
            for x in np.linspace(0.0, 50.0, 26):
                assert abs(brillouin(s, x) - langevin(x)) <= 1.0 / s

    def test_large_spin_close_tolerance(self):
        assert brillouin(1e6, 2.0) == pytest.approx(langevin(2.0), abs=1e-5)

    def test_monotone_and_odd(self):
        # strictly increasing until double-precision saturation (~x=19 for
        # s=1/2), non-decreasing beyond
        for s in (0.5, 1.5, 7.0):
            strict = [brillouin(s, x) for x in np.linspace(0.0, 15.0, 31)]
            assert all(b > a for a, b in zip(strict, strict[1:]))
            loose = [brillouin(s, x) for x in np.linspace(15.0, 30.0, 31)]
            assert all(b >= a for a, b in zip(loose, loose[1:]))
            assert brillouin(s, -4.2) == -brillouin(s, 4.2)

    def test_rejects_bad_spin(self):
        with pytest.raises(ValueError):
            brillouin(0.0, 1.0)
        with pytest.raises(ValueError):
            brillouin(-1.0, 1.0)


class TestLogSinhRatio:
    def test_counting_limit(self):
        # x -> 0+ gives ln(2s+1); probed at x = 1e-8
        assert log_sinh_ratio(0.5, 1e-8) == pytest.approx(math.log(2.0), abs=1e-9)
        assert log_sinh_ratio(1.0, 1e-8) == pytest.approx(math.log(3.0), abs=1e-9)
        assert log_sinh_ratio(50.0, 0.0) == pytest.approx(math.log(101.0), rel=1e-14)

    def test_pinned_value(self):
        assert log_sinh_ratio(1.5, 2.0) == pytest.approx(LOG_SINH_RATIO_15_AT_2, rel=1e-13)

    def test_matches_naive_formula_where_naive_is_safe(self):
        for s in (0.5, 1.0, 4.5):
            for x in np.linspace(0.05, 5.0, 23):
                a = (1.0 + 1.0 / (2.0 * s)) * x
                b = x / (2.0 * s)
                naive = math.log(math.sinh(a) / math.sinh(b))
                assert log_sinh_ratio(s, x) == pytest.approx(naive, rel=1e-12)

    def test_no_overflow_large_argument(self):
        # asymptotically the ratio term equals x itself
        val = log_sinh_ratio(1.0, 5000.0)
        assert val == pytest.approx(5000.0, rel=1e-12)
        assert math.isfinite(log_sinh_ratio(2.5, 1e4))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            log_sinh_ratio(1.0, -1.0)


class TestBesselI:
    def test_at_zero(self):
        assert bessel_i(0.0, 0.0) == 1.0
        assert bessel_i(1.5, 0.0) == 0.0

    def test_half_integer_closed_forms(self):
        assert bessel_i(0.5, 2.0) == pytest.approx(I_HALF_AT_2, rel=1e-12)
        assert bessel_i(1.5, 2.0) == pytest.approx(I_3HALF_AT_2, rel=1e-12)
        for x in np.geomspace(1e-3, 50.0, 40):
            closed = math.sqrt(2.0 / (math.pi * x)) * math.sinh(x)
            assert bessel_i(0.5, x) == pytest.approx(closed, rel=1e-10)

    def test_scaled_path(self):
        assert bessel_i(0.0, 700.0, scaled=True) == pytest.approx(IVE_0_AT_700, rel=1e-10)
        assert bessel_i(2.5, 1e4, scaled=True) == pytest.approx(IVE_25_AT_1E4, rel=1e-10)

    def test_overflow_raises_and_scaled_survives(self):
        with pytest.raises(OverflowError):
            bessel_i(0.0, 800.0)
        assert math.isfinite(bessel_i(0.0, 800.0, scaled=True))

    def test_rejects_bad_domain(self):
        with pytest.raises(ValueError):
            bessel_i(-1.0, 1.0)
        with pytest.raises(ValueError):
            bessel_i(1.0, -1.0)


class TestBesselRatio:
    def test_zero(self):
        for nu in (0.0, 0.5, 2.0, 7.5):
            assert bessel_ratio(nu, 0.0) == 0.0

    def test_langevin_identity(self):
        # I_{3/2}/I_{1/2} = coth(x) - 1/x
        for x in np.geomspace(1e-3, 50.0, 60):
            assert bessel_ratio(0.5, x) == pytest.approx(langevin(x), abs=1e-10, rel=1e-10)

    def test_against_scaled_library_ratio(self):
        # independent route: scipy's exponentially scaled I_nu
        for nu in (0.0, 0.5, 1.0, 3.5):
            for x in (0.2, 1.0, 7.7, 80.0, 500.0):
                expected = sp.ive(nu + 1.0, x) / sp.ive(nu, x)
                assert bessel_ratio(nu, x) == pytest.approx(expected, rel=1e-12)

    def test_small_and_large_argument_behavior(self):
        assert bessel_ratio(2.0, 1e-4) == pytest.approx(1e-4 / 6.0, rel=1e-6)
        assert bessel_ratio(2.0, 1e4) == pytest.approx(1.0, abs=1e-3)
        assert bessel_ratio(2.0, 1e4) == pytest.approx(RATIO_2_AT_1E4, rel=1e-12)

    def test_value_in_unit_interval(self):
        for nu in (0.0, 1.0, 4.0):
            for x in np.geomspace(1e-2, 1e4, 25):
                r = bessel_ratio(nu, x)
                assert 0.0 <= r < 1.0


class TestLogGamma:
    @pytest.mark.parametrize(
        "x,expected",
        [(1.0, 0.0), (0.5, math.log(math.sqrt(math.pi))), (6.0, math.log(120.0))],
    )
    def test_known_values(self, x, expected):
        assert log_gamma(x) == pytest.approx(expected, rel=1e-12, abs=1e-12)

    def test_against_gamma(self):
        for x in np.linspace(0.5, 30.0, 60):
            assert log_gamma(x) == pytest.approx(math.log(math.gamma(x)), rel=1e-12, abs=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError):
            log_gamma(0.0)
        with pytest.raises(ValueError):
            log_gamma(-3.0)


class TestSphereArea:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (2, 2.0 * math.pi),
            (3, 4.0 * math.pi),
            (4, 2.0 * math.pi**2),
        ],
    )
    def test_known_areas(self, n, expected):
        assert sphere_area(n) == pytest.approx(expected, rel=1e-13)

    def test_log_consistency(self):
        for n in range(2, 21):
            assert log_sphere_area(n) == pytest.approx(math.log(sphere_area(n)), rel=1e-13)

    def test_large_dimension_finite(self):
        assert math.isfinite(sphere_area(400))

    def test_domain(self):
        with pytest.raises(ValueError):
            sphere_area(1)


def test_everything_finite_on_wide_grid():
    # stability contract on x in [0, 1e4], scaled Bessel path
    for x in np.geomspace(1e-6, 1e4, 40):
        assert math.isfinite(langevin(x))
        assert math.isfinite(brillouin(0.5, x))
        assert math.isfinite(brillouin(250.0, x))
        assert math.isfinite(log_sinh_ratio(1.0, x))
        assert math.isfinite(bessel_i(1.0, x, scaled=True))
        assert math.isfinite(bessel_ratio(1.0, x))
