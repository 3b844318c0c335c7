import math

import numpy as np

from config import MonteCarloConfig, SamplerConfig, StatisticId
from dominance import Dataset, count_dominant_cycles, dominator_histogram, get_algorithm
from utils import ValidationError, check_k
from .base import Statistic, StatisticParams, StatisticRegistry


def _need(value, name: str, statistic_id: StatisticId) -> int:
    if value is None:
        raise ValidationError(f"statistic {statistic_id.value} needs {name}")
    return value


class SkylineCount(Statistic):
    statistic_id = StatisticId.SKYLINE_COUNT

    def validate(self, sampler_config: SamplerConfig, params: StatisticParams) -> None:
        pass

    def compute(self, dataset: Dataset, params: StatisticParams, config: MonteCarloConfig) -> float:
        return float(len(get_algorithm(config.algorithm).compute(dataset, dataset.d)))


class KDominantCount(Statistic):
    statistic_id = StatisticId.K_DOMINANT_COUNT

    def validate(self, sampler_config: SamplerConfig, params: StatisticParams) -> None:
        check_k(_need(params.k, "k", self.statistic_id), sampler_config.d)

    def compute(self, dataset: Dataset, params: StatisticParams, config: MonteCarloConfig) -> float:
        return float(len(get_algorithm(config.algorithm).compute(dataset, params.k)))


class CloudCell(Statistic):
    """Number of points k-dominated by exactly j others."""

    statistic_id = StatisticId.CLOUD_CELL

    def validate(self, sampler_config: SamplerConfig, params: StatisticParams) -> None:
        check_k(_need(params.k, "k", self.statistic_id), sampler_config.d)
        j = _need(params.j, "j", self.statistic_id)
        if not 0 <= j <= sampler_config.n - 1:
            raise ValidationError(f"j must satisfy 0 <= j <= n-1 (j={j}, n={sampler_config.n})")

    def compute(self, dataset: Dataset, params: StatisticParams, config: MonteCarloConfig) -> float:
        return float(dominator_histogram(dataset, params.k).cell(params.j))


class CumulativeCloud(Statistic):
    """Number of points k-dominated by at most m others."""

    statistic_id = StatisticId.CUMULATIVE_CLOUD

    def validate(self, sampler_config: SamplerConfig, params: StatisticParams) -> None:
        check_k(_need(params.k, "k", self.statistic_id), sampler_config.d)
        m = _need(params.m, "m", self.statistic_id)
        if not 0 <= m <= sampler_config.n - 1:
            raise ValidationError(f"m must satisfy 0 <= m <= n-1 (m={m}, n={sampler_config.n})")

    def compute(self, dataset: Dataset, params: StatisticParams, config: MonteCarloConfig) -> float:
        return float(dominator_histogram(dataset, params.k).cumulative(params.m))


class CycleCount(Statistic):
    statistic_id = StatisticId.CYCLE_COUNT

    def validate(self, sampler_config: SamplerConfig, params: StatisticParams) -> None:
        check_k(_need(params.k, "k", self.statistic_id), sampler_config.d)
        length = _need(params.length, "length", self.statistic_id)
        if not 2 <= length <= sampler_config.n:
            raise ValidationError(f"cycle length must satisfy 2 <= length <= n (length={length}, n={sampler_config.n})")

    def compute(self, dataset: Dataset, params: StatisticParams, config: MonteCarloConfig) -> float:
        return float(count_dominant_cycles(dataset, params.length, params.k, config.cycle_config))

    def cost(self, sampler_config: SamplerConfig, params: StatisticParams) -> int:
        return super().cost(sampler_config, params) + math.perm(sampler_config.n, params.length)


def cumulative_counts(dataset: Dataset, k: int, m_grid: np.ndarray) -> np.ndarray:
    """Per-trial cumulative cloud sizes at every m of the grid."""
    cells = dominator_histogram(dataset, k).cells()
    running = np.cumsum(cells)
    return running[np.minimum(m_grid, running.shape[0] - 1)].astype(np.float64)


REGISTRY = StatisticRegistry()
for _statistic in (SkylineCount(), KDominantCount(), CloudCell(), CumulativeCloud(), CycleCount()):
    REGISTRY.register(_statistic)
