from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np

from config import SamplerConfig
from dominance import Dataset
from utils import require


SEED_MASK = (1 << 64) - 1
UNIT_BITS = 53


def stream_generator(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator keyed by (seed, stream); the counter starts at zero."""
    key = ((int(stream) & SEED_MASK) << 64) | (int(seed) & SEED_MASK)
    return np.random.Generator(np.random.Philox(key=key))


def open_unit_interval(rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
    """Uniforms strictly inside (0, 1): (m + 1/2) / 2^53 for a 53-bit integer m."""
    m = rng.integers(0, 1 << UNIT_BITS, size=shape, dtype=np.int64)
    return (m.astype(np.float64) + 0.5) / float(1 << UNIT_BITS)


class BaseSampler(ABC):
    """Abstract base class for the random point models."""

    def __init__(self, config: SamplerConfig):
        require(config.n >= 0, f"n must be >= 0, got {config.n}")
        require(config.d >= 1, f"d must be >= 1, got {config.d}")
        self.config = config

    def generator(self, stream: int = 0) -> np.random.Generator:
        return stream_generator(self.config.seed, stream)

    def sample(self, stream: int = 0) -> Dataset:
        """Draw the dataset for one stream; equal (config, stream) gives equal data."""
        return self.draw(self.generator(stream))

    @abstractmethod
    def draw(self, rng: np.random.Generator) -> Dataset:
        """Draw n points from the model using `rng`."""
        pass
