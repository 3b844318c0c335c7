from typing import Sequence

import numpy as np

from utils import ValidationError, check_k


# Bound on the boolean scratch tensor built per chunk (rows x n x d).
CHUNK_ELEMENTS = 4_000_000


def k_dominates(p: Sequence[float], q: Sequence[float], k: int) -> bool:
    """True iff p <= q in at least k coordinates and p < q in at least one of them."""
    p = np.asarray(p)
    q = np.asarray(q)
    if p.shape != q.shape or p.ndim != 1:
        raise ValidationError(f"dimension mismatch: {p.shape} vs {q.shape}")
    check_k(k, p.shape[0])
    return bool(np.count_nonzero(p <= q) >= k and np.any(p < q))


def dominators_of(points: np.ndarray, target: np.ndarray, k: int) -> np.ndarray:
    """Boolean mask of the rows of `points` that k-dominate `target`."""
    at_most = np.count_nonzero(points <= target, axis=1)
    strictly = np.any(points < target, axis=1)
    return (at_most >= k) & strictly


def dominated_by(points: np.ndarray, source: np.ndarray, k: int) -> np.ndarray:
    """Boolean mask of the rows of `points` that `source` k-dominates."""
    at_most = np.count_nonzero(source <= points, axis=1)
    strictly = np.any(source < points, axis=1)
    return (at_most >= k) & strictly


def _row_chunks(n: int, d: int):
    step = max(1, CHUNK_ELEMENTS // max(1, n * d))
    for start in range(0, n, step):
        yield start, min(n, start + step)


def dominance_matrix(points: np.ndarray, k: int) -> np.ndarray:
    """A[i, j] is True iff point i k-dominates point j."""
    n, d = points.shape
    check_k(k, d)
    matrix = np.zeros((n, n), dtype=bool)
    for start, stop in _row_chunks(n, d):
        block = points[start:stop, None, :]
        at_most = np.count_nonzero(block <= points[None, :, :], axis=2)
        strictly = np.any(block < points[None, :, :], axis=2)
        matrix[start:stop] = (at_most >= k) & strictly
    return matrix


def dominator_counts(points: np.ndarray, k: int) -> np.ndarray:
    """Number of other points k-dominating each point, O(n^2 d) in chunks."""
    n, d = points.shape
    check_k(k, d)
    counts = np.zeros(n, dtype=np.int64)
    for start, stop in _row_chunks(n, d):
        block = points[start:stop, None, :]
        at_most = np.count_nonzero(points[None, :, :] <= block, axis=2)
        strictly = np.any(points[None, :, :] < block, axis=2)
        counts[start:stop] = np.count_nonzero((at_most >= k) & strictly, axis=1)
    return counts
