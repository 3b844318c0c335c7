from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet

import numpy as np

from .dataset import Dataset


@dataclass(frozen=True)
class DominatorHistogram:
    """Per-point dominator counts for one k; cells() gives L(j) at sample level."""

    counts: np.ndarray
    k: int

    @property
    def n(self) -> int:
        return int(self.counts.shape[0])

    def cells(self) -> np.ndarray:
        """cells()[j] = number of points k-dominated by exactly j others."""
        return np.bincount(self.counts, minlength=max(1, self.n))

    def cell(self, j: int) -> int:
        return int(np.count_nonzero(self.counts == j))

    def cumulative(self, m: int) -> int:
        return int(np.count_nonzero(self.counts <= m))


class SkylineAlgorithm(ABC):
    """Abstract base class for k-dominant skyline algorithms."""

    name: str = "abstract"

    def __init__(self):
        self.last_stats: Dict[str, Any] = {}

    @abstractmethod
    def compute(self, dataset: Dataset, k: int) -> FrozenSet[int]:
        """Indices of the points k-dominated by no other point."""
        pass

    def get_status_info(self) -> Dict[str, Any]:
        """Statistics recorded by the most recent compute() call."""
        return {"algorithm": self.name, **self.last_stats}
