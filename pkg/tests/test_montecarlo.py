import pytest

from analytics import categorical_mean, categorical_variance_limit, cycle_mean, lower_bound, skyline_mean
from asymptotics import simplex_skyline_mean
from config import MonteCarloConfig, SamplerConfig, SamplerModel, StatisticId
from montecarlo import (
    REGISTRY,
    MonteCarloHarness,
    StatisticParams,
    binomial_reference,
)
from utils import ValidationError, WorkLimitExceeded


SEED = 20240101


def hypercube(n, d, seed=SEED):
    return SamplerConfig(SamplerModel.HYPERCUBE, n, d, seed)


def test_registry_holds_every_statistic():
    assert REGISTRY.get_handler_count() == len(StatisticId)
    assert REGISTRY.get("cycle-count").statistic_id == StatisticId.CYCLE_COUNT


def test_estimate_is_reproducible():
    harness = MonteCarloHarness(MonteCarloConfig(workers=1))
    params = StatisticParams(k=2)
    first = harness.estimate("k-dominant-count", hypercube(40, 3), 30, params=params)
    second = harness.estimate("k-dominant-count", hypercube(40, 3), 30, params=params)
    assert first == second


def test_estimate_does_not_depend_on_worker_count():
    params = StatisticParams(k=2)
    serial = MonteCarloHarness(MonteCarloConfig(workers=1)).estimate("k-dominant-count", hypercube(40, 3), 12, params=params)
    pooled = MonteCarloHarness(MonteCarloConfig(workers=2)).estimate("k-dominant-count", hypercube(40, 3), 12, params=params)
    assert serial == pooled


def test_seed_override_changes_the_streams():
    harness = MonteCarloHarness(MonteCarloConfig(workers=1))
    base = harness.estimate("skyline-count", hypercube(40, 3), 20)
    other = harness.estimate("skyline-count", hypercube(40, 3), 20, seed=SEED + 1)
    assert other.seed == SEED + 1
    assert base.mean != other.mean


def test_confidence_interval_invariants():
    result = MonteCarloHarness(MonteCarloConfig(workers=1)).estimate("skyline-count", hypercube(30, 2), 50)
    assert result.trials == 50
    assert result.ci95 == pytest.approx((result.mean - 1.96 * result.stderr, result.mean + 1.96 * result.stderr))
    assert len(result.to_row()) == len(result.CSV_HEADER)


def test_harness_rejects_bad_requests():
    harness = MonteCarloHarness(MonteCarloConfig(workers=1))
    with pytest.raises(ValidationError):
        harness.estimate("skyline-count", hypercube(10, 2), 1)
    with pytest.raises(ValidationError):
        harness.estimate("k-dominant-count", hypercube(10, 2), 5)
    with pytest.raises(ValidationError):
        harness.estimate("cloud-cell", hypercube(10, 2), 5, params=StatisticParams(k=2, j=10))
    with pytest.raises(ValidationError):
        harness.estimate("cycle-count", hypercube(10, 2), 5, params=StatisticParams(k=1, length=11))


def test_work_ceiling():
    tight = MonteCarloHarness(MonteCarloConfig(workers=1, work_ceiling=1000))
    with pytest.raises(WorkLimitExceeded):
        tight.estimate("skyline-count", hypercube(20, 2), 10)
    forced = MonteCarloHarness(MonteCarloConfig(workers=1, work_ceiling=1000, force=True))
    assert forced.estimate("skyline-count", hypercube(20, 2), 10).trials == 10


def test_skyline_count_matches_harmonic_recurrence():
    result = MonteCarloHarness(MonteCarloConfig(workers=1)).estimate("skyline-count", hypercube(100, 3), 400)
    assert result.contains(skyline_mean(100, 3))


def test_two_cycles_match_closed_form():
    n = 50
    result = MonteCarloHarness(MonteCarloConfig(workers=1)).estimate(
        "cycle-count", hypercube(n, 2), 2000, params=StatisticParams(k=1, length=2)
    )
    assert 0.97 <= result.mean / float(cycle_mean(n, 2)) <= 1.03


def test_three_point_cycles_match_exact_probability():
    result = MonteCarloHarness(MonteCarloConfig(workers=1)).estimate(
        "cycle-count", hypercube(3, 3), 4000, params=StatisticParams(k=2, length=3)
    )
    # each orientation of the triangle closes with probability 1/36
    assert float(cycle_mean(3, 3)) == pytest.approx(2 / 36)
    assert result.contains(2 / 36)


def test_three_cycles_among_thirty_points():
    result = MonteCarloHarness(MonteCarloConfig(workers=1)).estimate(
        "cycle-count", hypercube(30, 3), 500, params=StatisticParams(k=2, length=3)
    )
    expected = float(cycle_mean(30, 3))
    assert expected == pytest.approx(225.56, abs=0.01)
    assert result.contains(expected)


def test_categorical_skyline_matches_exact_mean():
    config = SamplerConfig(SamplerModel.CATEGORICAL, n=2, seed=SEED, levels=(2, 2))
    result = MonteCarloHarness(MonteCarloConfig(workers=1)).estimate("skyline-count", config, 2000)
    assert result.contains(float(categorical_mean(2, 2, (2, 2))))


def test_means_shrink_as_k_decreases():
    harness = MonteCarloHarness(MonteCarloConfig(workers=1))
    means = [
        harness.estimate("k-dominant-count", hypercube(30, 4), 40, params=StatisticParams(k=k)).mean
        for k in range(1, 5)
    ]
    assert means == sorted(means)


def test_cumulative_cloud_curve():
    n = 40
    harness = MonteCarloHarness(MonteCarloConfig(workers=1))
    curve = harness.cumulative_cloud_curve(hypercube(n, 3), 2, range(n), 25)
    means = [mean for _, mean, _ in curve.rows]
    assert means == sorted(means)
    assert curve.value_at(n - 1) == n
    assert curve.rows[-1][2] == 0.0

    skyline = harness.estimate("k-dominant-count", hypercube(n, 3), 25, params=StatisticParams(k=2))
    assert curve.value_at(0) == pytest.approx(skyline.mean, rel=1e-12)


def test_cumulative_cloud_grid_must_fit():
    harness = MonteCarloHarness(MonteCarloConfig(workers=1))
    with pytest.raises(ValidationError):
        harness.cumulative_cloud_curve(hypercube(10, 2), 1, [0, 10], 5)


def test_cloud_cells_sum_to_n():
    harness = MonteCarloHarness(MonteCarloConfig(workers=1))
    total = sum(
        harness.estimate("cloud-cell", hypercube(12, 2), 10, params=StatisticParams(k=2, j=j)).mean
        for j in range(12)
    )
    assert total == pytest.approx(12.0)


def test_categorical_distribution_is_near_binomial():
    n = 50
    config = SamplerConfig(SamplerModel.CATEGORICAL, n=n, seed=SEED, levels=(2, 2))
    histogram = MonteCarloHarness(MonteCarloConfig(workers=1)).distribution_histogram("skyline-count", config, 10_000)
    assert sum(histogram.frequencies.values()) == pytest.approx(1.0)
    assert histogram.total_variation(binomial_reference(n, 0.25)) <= 0.05
    assert histogram.variance / n == pytest.approx(float(categorical_variance_limit((2, 2))), rel=0.2)


def test_degenerate_support_gives_point_mass():
    config = SamplerConfig(SamplerModel.CATEGORICAL, n=10, seed=SEED, support=((1, 2),), weights=(1.0,))
    histogram = MonteCarloHarness(MonteCarloConfig(workers=1)).distribution_histogram("skyline-count", config, 5)
    assert histogram.frequencies == {10: 1.0}
    assert histogram.total_variation(binomial_reference(10, 1.0)) == pytest.approx(0.0)


def test_binomial_reference_is_a_distribution():
    pmf = binomial_reference(20, 0.3)
    assert sum(pmf(v) for v in range(21)) == pytest.approx(1.0)


@pytest.mark.slow
def test_one_dominant_skyline_in_the_plane():
    result = MonteCarloHarness(MonteCarloConfig(workers=1)).estimate(
        "k-dominant-count", hypercube(200, 2), 50_000, params=StatisticParams(k=1)
    )
    assert result.contains(1 / 200)


@pytest.mark.slow
def test_simplex_skyline_matches_finite_sum():
    config = SamplerConfig(SamplerModel.SIMPLEX, 2000, 3, SEED)
    result = MonteCarloHarness(MonteCarloConfig(workers=1)).estimate("skyline-count", config, 200)
    assert result.contains(simplex_skyline_mean(2000, 3))


@pytest.mark.slow
def test_four_dominant_skyline_in_five_dimensions():
    harness = MonteCarloHarness(MonteCarloConfig(workers=1, force=True))
    result = harness.estimate("k-dominant-count", hypercube(10 ** 4, 5), 300, params=StatisticParams(k=4))
    assert 4.2 <= result.mean <= 5.4


@pytest.mark.slow
@pytest.mark.parametrize("k", [60, 70, 80, 90])
def test_lower_bound_sits_below_simulation(k):
    n, d = 1000, 100
    result = MonteCarloHarness(MonteCarloConfig(workers=1)).estimate(
        "k-dominant-count", hypercube(n, d), 30, params=StatisticParams(k=k)
    )
    bound = lower_bound(n, d, k)
    assert bound >= 0
    assert bound <= result.mean + 4 * result.stderr
