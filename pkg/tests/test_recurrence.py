import math

import pytest

from asymptotics import (
    f_d_asymptotic,
    f_d_leading,
    f_d_numeric,
    g_d,
    phi_operator_power_gd,
    sigma_m,
)
from asymptotics.recurrence import (
    sigma_by_compositions,
    sigma_by_inclusion_exclusion,
    truncation_point,
)
from utils import ValidationError


def test_sigma_examples():
    assert sigma_m(0, 4).value == 1
    assert sigma_m(1, 2).value == 2
    assert sigma_m(2, 5).value == 150
    assert sigma_m(3, 2).value == 0


@pytest.mark.parametrize("ell", range(1, 15))
def test_sigma_definitions_agree(ell):
    for m in range(0, ell + 1):
        assert sigma_by_compositions(m, ell) == sigma_by_inclusion_exclusion(m, ell)


def test_sigma_rejects_negative_m():
    with pytest.raises(ValidationError):
        sigma_m(-1, 3)


def test_phi_operator_endpoints():
    for d in (4, 6):
        assert phi_operator_power_gd(0, 1e5, d) == pytest.approx(g_d(1e5, d), rel=1e-12)
        assert phi_operator_power_gd(d - 2, 1e5, d) == 0.0


def test_phi_operator_at_zero_is_g_d():
    for n in (10.0, 1e3, 1e5, 1e9, 1e20):
        for d in range(3, 11):
            assert phi_operator_power_gd(0, n, d) == pytest.approx(g_d(n, d), rel=1e-12)


def test_f2_is_explicit():
    for n in (0.5, 3.0, 20.0):
        assert f_d_numeric(n, 2) == 2 * math.exp(-n) - math.exp(-2 * n)
        assert f_d_leading(n, 2) == f_d_numeric(n, 2)


def test_f3_leading_term():
    assert 2.85 <= f_d_numeric(1e6, 3) * 1e3 <= 3.15


def test_f4_leading_term():
    expected = 4 * math.pi ** 1.5
    assert 0.9 * expected <= f_d_numeric(1e12, 4) * 1e2 <= 1.1 * expected


def test_leading_forms_cover_two_to_five():
    assert f_d_leading(1e6, 3) == pytest.approx(3e-3)
    assert f_d_leading(1e12, 4) == pytest.approx(4 * math.pi ** 1.5 * 1e-2)
    assert f_d_leading(1e24, 5) > 0
    with pytest.raises(ValidationError):
        f_d_leading(1e6, 6)


def test_numeric_recurrence_dimension_limit():
    with pytest.raises(ValidationError):
        f_d_numeric(1e6, 6)


def test_asymptotic_factor_limits():
    d = 4
    scale = math.gamma(1 / (d - 1)) ** d / (d - 1)
    # rho -> 0 sends the factor to 0, rho -> infinity to 1/2
    assert f_d_asymptotic(1e300, d) < 1e-10 * scale
    assert f_d_asymptotic(1e4, 60) == pytest.approx(0.5 * math.gamma(1 / 59) ** 60 / 59, rel=1e-6)
    assert f_d_asymptotic(1e4, d) < scale


def test_truncation_point_bounds_the_tail():
    for a, power in [(1, 0), (1, 1), (2, 1), (3, 2)]:
        s = truncation_point(a, power)
        peak = power * a
        peak_value = math.exp(-peak / a) * (peak ** power if power else 1.0)
        assert math.exp(-s / a) * s ** power <= 1.01e-16 * peak_value
        assert s > peak


def test_sigma_counts_surjections():
    for ell in range(1, 15):
        assert sigma_m(ell - 1, ell).value == math.factorial(ell)
        assert sigma_m(ell, ell).value == 0
