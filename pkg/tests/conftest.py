import pytest

from config import DatasetMode
from dominance import Dataset


# The six-point example with many skyline points but few k-dominant ones.
SIX_POINTS = [
    (1, 2, 2, 3, 3),
    (3, 1, 2, 2, 3),
    (3, 3, 1, 2, 2),
    (2, 3, 3, 1, 2),
    (2, 2, 3, 3, 1),
    (2, 3, 1, 1, 3),
]


@pytest.fixture
def six_point_rows():
    return list(SIX_POINTS)


@pytest.fixture
def six_points():
    return Dataset.from_rows(SIX_POINTS)


@pytest.fixture
def six_points_without_p6(six_points):
    return six_points.without(5)


@pytest.fixture
def six_points_csv(tmp_path):
    path = tmp_path / "six_points.csv"
    lines = ["x1,x2,x3,x4,x5"] + [",".join(str(c) for c in point) for point in SIX_POINTS]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


@pytest.fixture
def categorical_table():
    return Dataset.from_rows([(1, 2), (2, 1), (1, 2), (2, 2)], DatasetMode.CATEGORICAL)
