import logging
import math
from typing import Optional

import numpy as np

from config import CycleConfig
from utils import ValidationError, WorkLimitExceeded, check_k
from .dataset import Dataset
from .predicates import dominance_matrix


logger = logging.getLogger(__name__)


def count_dominant_cycles(dataset: Dataset, length: int, k: int,
                          config: Optional[CycleConfig] = None) -> int:
    """
    Count k-dominant cycles of `length` distinct points.

    A cycle is a set of points plus an orientation, so p1 -> p2 -> ... -> p1 is
    counted once however it is rotated; the reversed cycle counts separately
    when it also exists.
    """
    config = config or CycleConfig()
    n, d = dataset.n, dataset.d
    check_k(k, d)
    if length < 2 or length > n:
        raise ValidationError(f"cycle length must satisfy 2 <= length <= n (length={length}, n={n})")

    work = math.perm(n, length)
    if work > config.work_limit:
        raise WorkLimitExceeded("cycle enumeration", work, config.work_limit)

    if k == d:
        # full dominance is transitive
        return 0

    adjacency = dominance_matrix(dataset.points, k)

    if length == 2:
        return int(np.count_nonzero(adjacency & adjacency.T)) // 2
    if length == 3:
        a = adjacency.astype(np.int64)
        return int(np.trace(a @ a @ a)) // 3
    return _enumerate_cycles(adjacency, length, config.work_limit)


def _enumerate_cycles(adjacency: np.ndarray, length: int, work_limit: int) -> int:
    # each cycle is rooted at its smallest index, so paths only visit larger vertices
    n = adjacency.shape[0]
    successors = [np.flatnonzero(adjacency[i]) for i in range(n)]
    count = 0
    steps = 0

    for root in range(n):
        stack = [(root, 1, frozenset((root,)))]
        while stack:
            vertex, depth, visited = stack.pop()
            for nxt in successors[vertex]:
                steps += 1
                if steps > work_limit:
                    raise WorkLimitExceeded("cycle enumeration", steps, work_limit)
                if depth == length:
                    if nxt == root:
                        count += 1
                    continue
                if nxt > root and nxt not in visited:
                    stack.append((int(nxt), depth + 1, visited | {int(nxt)}))

    logger.debug(f"Enumerated {count} cycles of length {length} in {steps} steps")
    return count
