import math

import pytest

from asymptotics import (
    d0_boundaries,
    d0_scale,
    d1_boundaries,
    d1_boundary,
    phi0,
    phi1,
    tau_d1,
    threshold_d0,
    threshold_d1,
    upsilon,
    upsilon_inverse,
)
from config import ThresholdKind
from utils import ValidationError


@pytest.mark.parametrize("n,expected", [
    (2, 2),
    (15, 2),
    (16, 3),
    (19682, 3),
    (19683, 4),
    (4294967295, 4),
    (4294967296, 5),
])
def test_threshold_d0_table(n, expected):
    assert threshold_d0(n).value == expected


def test_threshold_d0_big_integers():
    a6 = 6 ** 36
    assert threshold_d0(a6 - 1).value == 6
    assert threshold_d0(a6).value == 7


def test_d0_boundaries():
    assert d0_boundaries(4) == [2, 16, 19683, 4294967296]
    assert d0_boundaries(5)[-1] == 5 ** 25


def test_d0_agrees_with_lambert_scale():
    for n in (100, 10 ** 5, 10 ** 12):
        assert threshold_d0(n).value == math.floor(d0_scale(n)) + 1


def test_oscillators():
    for x in (2.0, 3.0, 7.0):
        assert phi0(x) == pytest.approx(1.0)
        assert phi1(x) == pytest.approx(math.e * x * x)
    for x in (1.3, 2.5, 6.9):
        assert 0.0 < phi0(x) <= 1.0
        assert phi1(x) >= 1.0


def test_d0_oscillators_at_boundary():
    result = threshold_d0(16)
    assert result.oscillators["tau"] == 0.0
    assert result.oscillators["phi0"] == pytest.approx(1.0)


def test_d0_oscillators_follow_the_clamped_fraction():
    for n in (15, 1000, 10 ** 9, 10 ** 40):
        osc = threshold_d0(n).oscillators
        assert 0.0 <= osc["tau"] < 1.0
        assert osc["phi0"] == phi0(osc["x"], osc["tau"])
        assert osc["phi1"] == phi1(osc["x"], osc["tau"])
    assert phi0(2.5, 0.0) == 1.0
    assert phi1(2.5, 0.5) == pytest.approx(math.exp(0.5) * 2.5)


# a_i published for i = 4..12
D1_VALUES = {4: 3, 5: 10, 6: 49, 7: 290, 8: 2022, 9: 16165, 10: 145405, 11: 1453435, 12: 15982276}


def test_d1_boundaries():
    boundaries = d1_boundaries(12)
    for i, expected in D1_VALUES.items():
        assert boundaries[i - 1] == expected


def test_d1_boundary_large_index_is_stable():
    a40 = d1_boundary(40)
    assert a40 > 10 ** 30
    assert d1_boundary(41) > a40


def test_threshold_d1_membership():
    assert threshold_d1(2022).value == 8
    assert threshold_d1(2021).value == 7
    assert threshold_d1(16165).value == 9
    assert threshold_d1(3).value == 4


def test_threshold_d1_rejects_small_n():
    with pytest.raises(ValidationError):
        threshold_d1(2)


def test_threshold_result_serialization():
    result = threshold_d0(19683)
    payload = result.to_dict()
    assert payload["kind"] == ThresholdKind.D0.value
    assert payload["value"] == 4
    assert payload["boundaries"][-1] == str(4 ** 16)
    assert payload["n"] == "19683"


def test_upsilon_inverse_round_trip():
    for n in (1e4, 1e9):
        for tau in (0.1, 0.5, 0.9):
            assert upsilon(upsilon_inverse(tau, n), n) == pytest.approx(tau, abs=1e-12)


def test_tau_d1_is_fractional():
    for n in (10, 1e3, 1e8):
        assert 0.0 <= tau_d1(n) < 1.0
