from typing import Optional, Sequence, Tuple

import numpy as np

from config import CategoricalConfig, DatasetMode, SamplerConfig
from dominance import Dataset
from utils import ValidationError
from .base import BaseSampler


def validate_levels(levels: Sequence[int]) -> Tuple[int, ...]:
    if not levels:
        raise ValidationError("categorical levels u_1..u_d are required")
    levels = tuple(int(u) for u in levels)
    if any(u < 2 for u in levels):
        raise ValidationError(f"every level count must be >= 2, got {levels}")
    return levels


def validate_weighted_support(support: Sequence[Sequence[int]], weights: Sequence[float],
                              tolerance: float = 1e-12) -> Tuple[np.ndarray, np.ndarray]:
    points = np.asarray(support, dtype=np.int64)
    probabilities = np.asarray(weights, dtype=np.float64)
    if points.ndim != 2 or points.shape[0] == 0:
        raise ValidationError("support must be a non-empty list of points")
    if probabilities.shape != (points.shape[0],):
        raise ValidationError(f"expected {points.shape[0]} weights, got {probabilities.shape[0]}")
    if np.any(probabilities < 0):
        raise ValidationError("weights must be nonnegative")
    if abs(float(probabilities.sum()) - 1.0) > tolerance:
        raise ValidationError(f"weights must sum to 1, got {float(probabilities.sum())!r}")
    if points.min() < 1:
        raise ValidationError("support coordinates must be >= 1")
    return points, probabilities


class CategoricalSampler(BaseSampler):
    """Uniform draws from the product grid, or weighted draws from an explicit support."""

    def __init__(self, config: SamplerConfig, categorical: Optional[CategoricalConfig] = None):
        self.categorical = categorical or CategoricalConfig()
        if config.support is not None:
            self.support, self.weights = validate_weighted_support(
                config.support, config.weights or (), self.categorical.weight_tolerance
            )
            config.d = self.support.shape[1]
            self.levels = None
        else:
            self.levels = validate_levels(config.levels or ())
            config.d = len(self.levels)
            self.support = self.weights = None
        super().__init__(config)

    def draw(self, rng: np.random.Generator) -> Dataset:
        n = self.config.n
        if self.support is not None:
            picks = rng.choice(self.support.shape[0], size=n, p=self.weights)
            return Dataset(self.support[picks].reshape(n, -1), DatasetMode.CATEGORICAL)

        columns = [rng.integers(1, u + 1, size=n, dtype=np.int64) for u in self.levels]
        points = np.stack(columns, axis=1) if n else np.zeros((0, len(self.levels)), dtype=np.int64)
        return Dataset(points, DatasetMode.CATEGORICAL)
