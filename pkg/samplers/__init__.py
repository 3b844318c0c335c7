"""
Samplers Package

Reproducible random datasets for the hypercube, simplex, categorical and line-A
models. Every sampler draws from a Philox stream keyed by (seed, stream), so a
Monte Carlo trial t is fully determined by the master seed and t.
"""

from typing import Dict, Optional

from config import SamplerConfig, SamplerModel
from dominance import Dataset

from .base import BaseSampler, stream_generator, open_unit_interval
from .continuous import HypercubeSampler, SimplexSampler, LineASampler
from .categorical import CategoricalSampler, validate_levels, validate_weighted_support


SAMPLERS: Dict[SamplerModel, type] = {
    SamplerModel.HYPERCUBE: HypercubeSampler,
    SamplerModel.SIMPLEX: SimplexSampler,
    SamplerModel.CATEGORICAL: CategoricalSampler,
    SamplerModel.LINE_A: LineASampler,
}


def make_sampler(config: SamplerConfig) -> BaseSampler:
    return SAMPLERS[config.model](config)


def sample_hypercube(n: int, d: int, seed: Optional[int] = None, stream: int = 0) -> Dataset:
    return HypercubeSampler(SamplerConfig(SamplerModel.HYPERCUBE, n, d, seed)).sample(stream)


def sample_simplex(n: int, d: int, seed: Optional[int] = None, stream: int = 0) -> Dataset:
    return SimplexSampler(SamplerConfig(SamplerModel.SIMPLEX, n, d, seed)).sample(stream)


def sample_categorical(config: SamplerConfig, stream: int = 0) -> Dataset:
    return CategoricalSampler(config).sample(stream)


def sample_line_A(n: int, seed: Optional[int] = None, stream: int = 0) -> Dataset:
    return LineASampler(SamplerConfig(SamplerModel.LINE_A, n, 4, seed)).sample(stream)


__all__ = [
    'BaseSampler',
    'HypercubeSampler',
    'SimplexSampler',
    'CategoricalSampler',
    'LineASampler',
    'SAMPLERS',
    'make_sampler',
    'stream_generator',
    'open_unit_interval',
    'validate_levels',
    'validate_weighted_support',
    'sample_hypercube',
    'sample_simplex',
    'sample_categorical',
    'sample_line_A',
]
