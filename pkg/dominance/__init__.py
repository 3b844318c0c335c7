"""
Dominance Package

Dominance predicates and exact algorithms for skylines, k-dominant skylines,
dominator-count histograms and dominant-cycle counting on a concrete dataset.
"""

from typing import Dict, FrozenSet, Union

from config import SkylineAlgorithmId

from .dataset import Dataset
from .base import SkylineAlgorithm, DominatorHistogram
from .predicates import k_dominates, dominance_matrix, dominator_counts
from .exhaustive import ExhaustiveSkyline, dominator_histogram
from .three_phase import ThreePhaseSkyline
from .cycles import count_dominant_cycles


ALGORITHMS: Dict[SkylineAlgorithmId, type] = {
    SkylineAlgorithmId.EXHAUSTIVE: ExhaustiveSkyline,
    SkylineAlgorithmId.THREE_PHASE: ThreePhaseSkyline,
}


def get_algorithm(algorithm: Union[str, SkylineAlgorithmId] = SkylineAlgorithmId.EXHAUSTIVE) -> SkylineAlgorithm:
    return ALGORITHMS[SkylineAlgorithmId(algorithm)]()


def k_dominant_skyline(dataset: Dataset, k: int,
                       algorithm: Union[str, SkylineAlgorithmId] = SkylineAlgorithmId.EXHAUSTIVE) -> FrozenSet[int]:
    return get_algorithm(algorithm).compute(dataset, k)


def skyline(dataset: Dataset,
            algorithm: Union[str, SkylineAlgorithmId] = SkylineAlgorithmId.EXHAUSTIVE) -> FrozenSet[int]:
    return k_dominant_skyline(dataset, dataset.d, algorithm)


__all__ = [
    'Dataset',
    'DominatorHistogram',

    # Algorithms
    'SkylineAlgorithm',
    'ExhaustiveSkyline',
    'ThreePhaseSkyline',
    'ALGORITHMS',
    'get_algorithm',

    # Operations
    'k_dominates',
    'skyline',
    'k_dominant_skyline',
    'dominator_histogram',
    'dominator_counts',
    'dominance_matrix',
    'count_dominant_cycles',
]
