import logging
import math
from collections import Counter
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence

import numpy as np

from config import CategoricalConfig
from dominance.predicates import k_dominates
from utils import ValidationError, check_k, require
from .base import ExactValue, as_fraction


logger = logging.getLogger(__name__)


def _grid_size(levels: Sequence[int]) -> int:
    return math.prod(levels)


def _check_levels(levels: Sequence[int]):
    require(len(levels) >= 1, "levels u_1..u_d are required")
    require(all(u >= 2 for u in levels), f"every level count must be >= 2, got {tuple(levels)}")


def categorical_volume(x: Sequence[int], k: int, levels: Sequence[int]) -> int:
    """
    Number of grid points that k-dominate x.

    A dominator is <= x on a set of at least k coordinates (strict on one of
    them) and > x on the remaining set J of size l <= d-k; each J contributes
    (prod_{i not in J} x_i - 1) * prod_{i in J} (u_i - x_i).
    """
    d = len(levels)
    _check_levels(levels)
    check_k(k, d)
    if len(x) != d or any(not 1 <= xi <= u for xi, u in zip(x, levels)):
        raise ValidationError(f"point {tuple(x)} is not on the grid {tuple(levels)}")

    volume = 0
    for size in range(d - k + 1):
        for above in combinations(range(d), size):
            below = math.prod(x[i] for i in range(d) if i not in above) - 1
            volume += below * math.prod(levels[i] - x[i] for i in above)
    return volume


def categorical_mean_two_level(n: int, k: int, d: int) -> ExactValue:
    """Closed form for u_1 = ... = u_d = 2, grouping points by their number l of 2's."""
    require(n >= 1, f"n must be >= 1, got {n}")
    check_k(k, d)
    u = 2 ** d
    total = 0
    for ell in range(d + 1):
        volume = (2 ** ell - 1) * sum(math.comb(d - ell, j) for j in range(d - k + 1))
        total += math.comb(d, ell) * (u - volume) ** (n - 1)
    return ExactValue(Fraction(n * total, u ** n))


def categorical_mean(n: int, k: int, levels: Sequence[int],
                     config: Optional[CategoricalConfig] = None) -> ExactValue:
    """Expected k-dominant skyline size of n uniform points on the grid."""
    config = config or CategoricalConfig()
    require(n >= 1, f"n must be >= 1, got {n}")
    _check_levels(levels)
    d = len(levels)
    check_k(k, d)
    if all(u == 2 for u in levels):
        return categorical_mean_two_level(n, k, d)

    u = _grid_size(levels)
    if u > config.max_grid_size:
        raise ValidationError(f"grid too large: u={u} exceeds cap {config.max_grid_size}")

    volumes = Counter(
        categorical_volume(x, k, levels)
        for x in product(*(range(1, level + 1) for level in levels))
    )
    total = sum(count * (u - volume) ** (n - 1) for volume, count in volumes.items())
    logger.debug(f"Categorical grid u={u}: {len(volumes)} distinct dominator volumes")
    return ExactValue(Fraction(n * total, u ** n))


def _domination_mass(support: np.ndarray, weights: Sequence[Fraction], k: int):
    # p_k(a_j): total weight of the support points k-dominating a_j
    masses = []
    for target in support:
        mass = sum((w for a, w in zip(support, weights) if k_dominates(a, target, k)), Fraction(0))
        masses.append(mass)
    return masses


def _weighted_table(support, weights):
    points = np.asarray(support)
    require(points.ndim == 2 and points.shape[0] >= 1, "support must be a non-empty list of points")
    fractions = [as_fraction(w) for w in weights]
    require(len(fractions) == points.shape[0], "one weight per support point is required")
    require(all(w >= 0 for w in fractions), "weights must be nonnegative")
    if abs(float(sum(fractions)) - 1.0) > 1e-12:
        raise ValidationError(f"weights must sum to 1, got {float(sum(fractions))!r}")
    return points, fractions


def categorical_mean_weighted(n: int, k: int, support, weights) -> ExactValue:
    """n * sum_j P(a_j) (1 - p_k(a_j))^(n-1) for a weighted finite support."""
    require(n >= 1, f"n must be >= 1, got {n}")
    points, fractions = _weighted_table(support, weights)
    check_k(k, points.shape[1])
    masses = _domination_mass(points, fractions, k)
    return ExactValue(n * sum((w * (1 - p) ** (n - 1) for w, p in zip(fractions, masses)), Fraction(0)))


def categorical_limit(support, weights, k: int) -> ExactValue:
    """Limit of E[M]/n: the total weight of support points nobody k-dominates."""
    points, fractions = _weighted_table(support, weights)
    check_k(k, points.shape[1])
    masses = _domination_mass(points, fractions, k)
    return ExactValue(sum((w for w, p in zip(fractions, masses) if p == 0), Fraction(0)))


def categorical_limit_uniform(levels: Sequence[int]) -> ExactValue:
    _check_levels(levels)
    return ExactValue(Fraction(1, _grid_size(levels)))


def categorical_variance_limit(levels: Sequence[int]) -> ExactValue:
    """Limit of Var[M]/n, the Binomial(n, 1/u) variance per point."""
    p = categorical_limit_uniform(levels).value
    return ExactValue(p * (1 - p))
