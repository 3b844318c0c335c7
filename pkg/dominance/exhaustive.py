import logging
from typing import FrozenSet

import numpy as np

from utils import check_k
from .base import DominatorHistogram, SkylineAlgorithm
from .dataset import Dataset
from .predicates import dominator_counts


class ExhaustiveSkyline(SkylineAlgorithm):
    """Reference O(n^2 d) check of every ordered pair."""

    name = "exhaustive"

    def __init__(self):
        super().__init__()
        self.logger = logging.getLogger(__name__)

    def compute(self, dataset: Dataset, k: int) -> FrozenSet[int]:
        check_k(k, dataset.d)
        if dataset.n == 0:
            self.last_stats = {"n": 0, "skyline": 0}
            return frozenset()
        counts = dominator_counts(dataset.points, k)
        result = frozenset(int(i) for i in np.flatnonzero(counts == 0))
        self.last_stats = {"n": dataset.n, "comparisons": dataset.n * dataset.n, "skyline": len(result)}
        self.logger.debug(f"Exhaustive k={k}: {len(result)} of {dataset.n} points survive")
        return result


def dominator_histogram(dataset: Dataset, k: int) -> DominatorHistogram:
    check_k(k, dataset.d)
    if dataset.n == 0:
        return DominatorHistogram(np.zeros(0, dtype=np.int64), k)
    return DominatorHistogram(dominator_counts(dataset.points, k), k)
