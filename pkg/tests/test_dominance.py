from itertools import permutations

import numpy as np
import pytest

from config import CycleConfig, DatasetMode
from dominance import (
    Dataset,
    ExhaustiveSkyline,
    ThreePhaseSkyline,
    count_dominant_cycles,
    dominance_matrix,
    dominator_counts,
    dominator_histogram,
    k_dominant_skyline,
    k_dominates,
    skyline,
)
from samplers import sample_hypercube, sample_line_A
from samplers.base import stream_generator
from utils import DatasetFormatError, ValidationError, WorkLimitExceeded


def test_k_dominates_examples():
    assert k_dominates((1, 2), (2, 3), 2)
    assert k_dominates((3, 1, 2, 2, 3), (1, 2, 2, 3, 3), 4)
    assert not k_dominates((1, 2, 3), (1, 2, 3), 1)
    assert not k_dominates((1, 2, 3), (1, 2, 3), 3)


def test_k_dominates_rejects_bad_input():
    with pytest.raises(ValidationError):
        k_dominates((1, 2), (1, 2, 3), 2)
    with pytest.raises(ValidationError):
        k_dominates((1, 2), (2, 3), 0)
    with pytest.raises(ValidationError):
        k_dominates((1, 2), (2, 3), 3)


def test_six_points_skyline_keeps_every_point(six_points):
    assert skyline(six_points) == frozenset(range(6))
    assert k_dominant_skyline(six_points, 5) == frozenset(range(6))


def test_six_points_three_dominant_skyline_is_empty(six_points):
    assert k_dominant_skyline(six_points, 3) == frozenset()


def test_six_points_four_dominant_skyline_follows_definition(six_points, six_point_rows):
    # p4 and p6 4-dominate each other, so neither survives
    p4, p6 = six_point_rows[3], six_point_rows[5]
    assert k_dominates(p4, p6, 4)
    assert k_dominates(p6, p4, 4)
    assert k_dominant_skyline(six_points, 4) == frozenset()


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_six_points_without_p6_has_empty_k_dominant_skylines(six_points_without_p6, k):
    assert k_dominant_skyline(six_points_without_p6, k) == frozenset()
    assert skyline(six_points_without_p6) == frozenset(range(5))


def test_singleton_and_empty_datasets():
    single = Dataset.from_rows([(0.3, 0.7, 0.1)])
    assert skyline(single) == frozenset({0})
    assert k_dominant_skyline(single, 1) == frozenset({0})
    empty = Dataset(np.zeros((0, 3)))
    assert skyline(empty) == frozenset()
    assert ThreePhaseSkyline().compute(empty, 2) == frozenset()


@pytest.mark.parametrize("k", [3, 4])
def test_line_a_points_are_mutually_incomparable(k):
    dataset = sample_line_A(25, seed=7)
    assert k_dominant_skyline(dataset, k) == frozenset(range(25))


def test_line_a_collapses_for_k2():
    dataset = sample_line_A(25, seed=7)
    assert len(k_dominant_skyline(dataset, 2)) <= 1


@pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
def test_three_phase_matches_exhaustive_on_continuous_data(seed):
    dataset = sample_hypercube(60, 4, seed=seed)
    exhaustive, pruned = ExhaustiveSkyline(), ThreePhaseSkyline()
    for k in range(1, 5):
        assert pruned.compute(dataset, k) == exhaustive.compute(dataset, k)


@pytest.mark.parametrize("seed", [11, 12, 13])
def test_three_phase_matches_exhaustive_with_ties(seed):
    rng = stream_generator(seed)
    points = rng.integers(1, 4, size=(40, 3))
    dataset = Dataset(points, DatasetMode.CATEGORICAL)
    exhaustive, pruned = ExhaustiveSkyline(), ThreePhaseSkyline()
    for k in range(1, 4):
        assert pruned.compute(dataset, k) == exhaustive.compute(dataset, k)


def test_three_phase_reports_phase_statistics(six_points):
    algorithm = ThreePhaseSkyline()
    algorithm.compute(six_points, 4)
    info = algorithm.get_status_info()
    assert info["algorithm"] == "three-phase"
    assert info["phase1_candidates"] >= info["phase2_candidates"] >= info["skyline"] == 0


def test_k_dominant_skylines_are_nested():
    dataset = sample_hypercube(80, 5, seed=3)
    previous = frozenset()
    for k in range(1, 6):
        current = k_dominant_skyline(dataset, k)
        assert previous <= current
        previous = current


def test_skyline_is_permutation_invariant():
    dataset = sample_hypercube(50, 4, seed=9)
    order = np.random.default_rng(0).permutation(50)
    shuffled = dataset.permuted(point_order=order)
    for k in range(1, 5):
        original = k_dominant_skyline(dataset, k)
        assert {int(order[i]) for i in k_dominant_skyline(shuffled, k)} == original
        assert k_dominant_skyline(dataset.permuted(axis_order=[3, 1, 0, 2]), k) == original


def test_dominator_histogram_on_six_points(six_points, six_points_without_p6):
    full = dominator_histogram(six_points, 5)
    assert np.all(full.counts == 0)
    assert full.cell(0) == 6

    dominated = dominator_histogram(six_points_without_p6, 4)
    assert np.all(dominated.counts >= 1)
    assert dominated.cell(0) == 0


def test_dominator_histogram_cells_sum_to_n():
    dataset = sample_hypercube(40, 3, seed=5)
    histogram = dominator_histogram(dataset, 2)
    assert histogram.cells().sum() == 40
    assert histogram.cumulative(39) == 40
    assert histogram.cumulative(0) == len(k_dominant_skyline(dataset, 2))


def test_dominance_matrix_agrees_with_predicate(six_points, six_point_rows):
    matrix = dominance_matrix(six_points.points, 4)
    for i, p in enumerate(six_point_rows):
        for j, q in enumerate(six_point_rows):
            assert matrix[i, j] == k_dominates(p, q, 4)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_dominator_counts_are_matrix_column_sums(k):
    points = stream_generator(11).integers(1, 4, size=(60, 3)).astype(np.float64)
    np.testing.assert_array_equal(dominator_counts(points, k), dominance_matrix(points, k).sum(axis=0))


def _brute_force_cycles(dataset, length, k):
    matrix = dominance_matrix(dataset.points, k)
    closed = 0
    for walk in permutations(range(dataset.n), length):
        if all(matrix[walk[i], walk[(i + 1) % length]] for i in range(length)):
            closed += 1
    return closed // length


def test_two_point_cycle():
    dataset = Dataset.from_rows([(0.1, 0.9), (0.2, 0.3)])
    assert count_dominant_cycles(dataset, 2, 1) == 1


def test_full_dominance_has_no_cycles():
    dataset = sample_hypercube(30, 3, seed=2)
    for length in (2, 3):
        assert count_dominant_cycles(dataset, length, 3) == 0


@pytest.mark.parametrize("length", [2, 3, 4, 5])
def test_cycle_count_matches_brute_force(length):
    dataset = sample_hypercube(8, 3, seed=21)
    assert count_dominant_cycles(dataset, length, 2) == _brute_force_cycles(dataset, length, 2)


def test_cycle_count_respects_work_limit():
    dataset = sample_hypercube(10, 3, seed=1)
    with pytest.raises(WorkLimitExceeded):
        count_dominant_cycles(dataset, 3, 2, CycleConfig(work_limit=10))
    with pytest.raises(ValidationError):
        count_dominant_cycles(dataset, 11, 2)


def test_csv_round_trip(tmp_path, six_points):
    path = str(tmp_path / "points.csv")
    six_points.to_csv(path)
    loaded = Dataset.from_csv(path)
    assert np.array_equal(loaded.points, six_points.points)
    assert open(path, encoding="utf-8").read().startswith("x1,x2,x3,x4,x5\n")


@pytest.mark.parametrize("content,row", [
    ("a,b\n1,2\n", 1),
    ("x1,x2\n1,2\n3\n", 3),
    ("x1,x2\n1,2\n0.5,oops\n", 3),
])
def test_csv_diagnostics_carry_row_numbers(tmp_path, content, row):
    path = tmp_path / "bad.csv"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(DatasetFormatError) as excinfo:
        Dataset.from_csv(str(path))
    assert excinfo.value.row == row
    assert f"row {row}" in str(excinfo.value)


def test_categorical_csv_requires_positive_integers(tmp_path):
    path = tmp_path / "grid.csv"
    path.write_text("x1,x2\n1,2\n0,1\n", encoding="utf-8")
    with pytest.raises(DatasetFormatError):
        Dataset.from_csv(str(path), DatasetMode.CATEGORICAL)


def test_dataset_validation():
    with pytest.raises(ValidationError):
        Dataset(np.array([[0.1, np.nan]]))
    with pytest.raises(ValidationError):
        Dataset.from_rows([(1, 2), (1, 2, 3)])
    dataset = Dataset.from_rows([(0.1, 0.2)])
    with pytest.raises(ValueError):
        dataset.points[0, 0] = 1.0


def _random_corpus(seed, count):
    rng = stream_generator(seed)
    for _ in range(count):
        n = int(rng.integers(1, 513))
        d = int(rng.integers(1, 9))
        if rng.random() < 0.5:
            levels = int(rng.integers(2, 6))
            yield Dataset(rng.integers(1, levels + 1, size=(n, d)), DatasetMode.CATEGORICAL)
        else:
            yield Dataset(rng.random((n, d)))


def _check_corpus(seed, count):
    exhaustive, pruned = ExhaustiveSkyline(), ThreePhaseSkyline()
    for dataset in _random_corpus(seed, count):
        previous = frozenset()
        for k in range(1, dataset.d + 1):
            expected = exhaustive.compute(dataset, k)
            assert pruned.compute(dataset, k) == expected
            assert previous <= expected
            previous = expected


def test_random_corpus_with_ties():
    _check_corpus(31, 40)


@pytest.mark.slow
def test_large_random_corpus_with_ties():
    _check_corpus(32, 10 ** 4)
