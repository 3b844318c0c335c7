import numpy as np

from config import SamplerConfig
from dominance import Dataset
from .base import BaseSampler, open_unit_interval


class HypercubeSampler(BaseSampler):
    """i.i.d. points with coordinates uniform on (0,1)."""

    def draw(self, rng: np.random.Generator) -> Dataset:
        return Dataset(open_unit_interval(rng, (self.config.n, self.config.d)))


class SimplexSampler(BaseSampler):
    """
    Uniform points of {-1 <= x_j <= 0, sum |x_j| <= 1} from d+1 exponential
    spacings: x_j = -e_j / (e_1 + ... + e_{d+1}).
    """

    def draw(self, rng: np.random.Generator) -> Dataset:
        n, d = self.config.n, self.config.d
        spacings = -np.log(open_unit_interval(rng, (n, d + 1)))
        totals = spacings.sum(axis=1, keepdims=True)
        return Dataset(-spacings[:, :d] / totals)


class LineASampler(BaseSampler):
    """Points (-t, -2t, 3t, 4t) with t uniform on [1, 2]; pairwise 3-incomparable."""

    DIRECTION = np.array([-1.0, -2.0, 3.0, 4.0])

    def __init__(self, config: SamplerConfig):
        config.d = 4
        super().__init__(config)

    def draw(self, rng: np.random.Generator) -> Dataset:
        t = 1.0 + open_unit_interval(rng, (self.config.n, 1))
        return Dataset(t * self.DIRECTION[None, :])
