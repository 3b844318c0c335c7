import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from config import MonteCarloConfig, SamplerConfig, StatisticId
from dominance import Dataset


@dataclass(frozen=True)
class StatisticParams:
    k: Optional[int] = None
    j: Optional[int] = None
    m: Optional[int] = None
    length: Optional[int] = None

    def to_dict(self) -> Dict[str, int]:
        return {key: value for key, value in self.__dict__.items() if value is not None}


@dataclass
class EstimateResult:
    statistic: StatisticId
    params: Dict[str, Any]
    trials: int
    mean: float
    stderr: float
    ci95: Tuple[float, float]
    seed: int

    @classmethod
    def from_values(cls, statistic: StatisticId, params: Dict[str, Any], values: np.ndarray, seed: int) -> "EstimateResult":
        trials = int(values.shape[0])
        mean = float(np.mean(values))
        stderr = float(np.std(values, ddof=1)) / math.sqrt(trials)
        return cls(
            statistic=statistic,
            params=params,
            trials=trials,
            mean=mean,
            stderr=stderr,
            ci95=(mean - 1.96 * stderr, mean + 1.96 * stderr),
            seed=seed,
        )

    def contains(self, value: float, width: float = 4.0) -> bool:
        """True when value lies within `width` standard errors of the mean."""
        return abs(self.mean - value) <= width * self.stderr

    CSV_HEADER = ["statistic", "model", "n", "d", "k", "j", "m", "length",
                  "trials", "mean", "stderr", "ci95_lo", "ci95_hi", "seed"]

    def to_row(self) -> List[Any]:
        p = self.params
        return [
            self.statistic.value, p.get("model"), p.get("n"), p.get("d"), p.get("k"), p.get("j"),
            p.get("m"), p.get("length"), self.trials, repr(self.mean), repr(self.stderr),
            repr(self.ci95[0]), repr(self.ci95[1]), self.seed,
        ]


@dataclass
class CloudCurve:
    k: int
    rows: List[Tuple[int, float, float]] = field(default_factory=list)   # (m, mean, stderr)

    def value_at(self, m: int) -> float:
        for grid_m, mean, _ in self.rows:
            if grid_m == m:
                return mean
        raise KeyError(m)


@dataclass
class EmpiricalDistribution:
    frequencies: Dict[int, float]
    trials: int
    mean: float
    variance: float

    def total_variation(self, reference_pmf: Callable[[int], float]) -> float:
        """Half the L1 distance; mass the reference puts off the observed values counts in full."""
        observed = sum(abs(freq - reference_pmf(value)) for value, freq in self.frequencies.items())
        unseen = 1.0 - sum(reference_pmf(value) for value in self.frequencies)
        return 0.5 * (observed + max(unseen, 0.0))


class Statistic(ABC):
    """Abstract base class for per-trial statistics."""

    statistic_id: StatisticId

    @abstractmethod
    def validate(self, sampler_config: SamplerConfig, params: StatisticParams) -> None:
        """Raise ValidationError when params do not fit the sampler."""
        pass

    @abstractmethod
    def compute(self, dataset: Dataset, params: StatisticParams, config: MonteCarloConfig) -> float:
        """Evaluate the statistic on one sampled dataset."""
        pass

    def cost(self, sampler_config: SamplerConfig, params: StatisticParams) -> int:
        """Elementary comparisons needed for one trial."""
        return sampler_config.n * sampler_config.n * sampler_config.d


class StatisticRegistry:
    def __init__(self):
        self.handlers: Dict[StatisticId, Statistic] = {}
        self.logger = logging.getLogger(__name__)

    def register(self, statistic: Statistic) -> None:
        self.handlers[statistic.statistic_id] = statistic
        self.logger.debug(f"Registered statistic: {statistic.statistic_id.value}")

    def get(self, statistic_id: StatisticId) -> Statistic:
        return self.handlers[StatisticId(statistic_id)]

    def get_handler_count(self) -> int:
        return len(self.handlers)
