"""
Monte Carlo Package

Trial-replication harness estimating skyline, cloud and cycle expectations by
simulation, with one RNG stream per trial and order-independent reduction.
"""

from .base import (
    StatisticParams,
    EstimateResult,
    CloudCurve,
    EmpiricalDistribution,
    Statistic,
    StatisticRegistry,
)
from .statistics import (
    REGISTRY,
    SkylineCount,
    KDominantCount,
    CloudCell,
    CumulativeCloud,
    CycleCount,
    cumulative_counts,
)
from .harness import MonteCarloHarness, binomial_reference

__all__ = [
    'MonteCarloHarness',
    'binomial_reference',

    # Results
    'StatisticParams',
    'EstimateResult',
    'CloudCurve',
    'EmpiricalDistribution',

    # Statistics
    'Statistic',
    'StatisticRegistry',
    'REGISTRY',
    'SkylineCount',
    'KDominantCount',
    'CloudCell',
    'CumulativeCloud',
    'CycleCount',
    'cumulative_counts',
]
