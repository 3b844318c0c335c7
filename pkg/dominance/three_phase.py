import logging
from typing import FrozenSet, List

import numpy as np

from utils import check_k
from .base import SkylineAlgorithm
from .dataset import Dataset
from .predicates import dominated_by, dominators_of


class ThreePhaseSkyline(SkylineAlgorithm):
    """
    Pruned k-dominant skyline.

    Phase 1 scans the points by increasing coordinate sum and keeps a running
    candidate pool: a point k-dominated by a pool member is discarded, and pool
    members it k-dominates are evicted. Every discarded point has a witness, so
    the pool is a superset of the answer. Phase 2 verifies the surviving
    candidates pairwise. Phase 3 checks the remaining candidates against the
    points eliminated earlier, which catches domination through cycles.
    """

    name = "three-phase"

    def __init__(self):
        super().__init__()
        self.logger = logging.getLogger(__name__)

    def compute(self, dataset: Dataset, k: int) -> FrozenSet[int]:
        check_k(k, dataset.d)
        n = dataset.n
        if n == 0:
            self.last_stats = {"n": 0, "skyline": 0}
            return frozenset()

        points = dataset.points
        order = np.argsort(points.sum(axis=1), kind="stable")

        # phase 1
        pool: List[int] = []
        pool_points = np.empty((0, dataset.d), dtype=points.dtype)
        for index in order:
            point = points[index]
            if pool and np.any(dominators_of(pool_points, point, k)):
                continue
            if pool:
                keep = ~dominated_by(pool_points, point, k)
                if not np.all(keep):
                    pool = [p for p, kept in zip(pool, keep) if kept]
                    pool_points = pool_points[keep]
            pool.append(int(index))
            pool_points = np.vstack([pool_points, point[None, :]])
        phase1 = len(pool)

        # phase 2
        survivors = []
        for index in pool:
            mask = dominators_of(pool_points, points[index], k)
            if not np.any(mask):
                survivors.append(index)
        phase2 = len(survivors)

        # phase 3
        eliminated = np.ones(n, dtype=bool)
        eliminated[pool] = False
        others = points[eliminated]
        result = []
        for index in survivors:
            if others.shape[0] and np.any(dominators_of(others, points[index], k)):
                continue
            result.append(index)

        self.last_stats = {
            "n": n,
            "phase1_candidates": phase1,
            "phase2_candidates": phase2,
            "skyline": len(result),
        }
        self.logger.debug(f"Three-phase k={k}: pool {phase1} -> verified {phase2} -> skyline {len(result)}")
        return frozenset(result)
