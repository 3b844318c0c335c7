from typing import Sequence

import numpy as np

from utils import ValidationError, check_k


def _as_cube_point(x: Sequence[float]) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1 or np.any((x < 0) | (x > 1)):
        raise ValidationError("x must be a point of [0,1]^d")
    return x


def dominating_volume(x: Sequence[float], k: int) -> float:
    """
    Probability that a uniform point of [0,1]^d k-dominates x.

    Coordinate j of the other point falls below x_j with probability x_j,
    independently, so the count of such coordinates is Poisson-binomial.
    """
    x = _as_cube_point(x)
    d = x.shape[0]
    check_k(k, d)
    # distribution[c] = P(exactly c coordinates below x)
    distribution = np.zeros(d + 1)
    distribution[0] = 1.0
    for p in x:
        distribution[1:] = distribution[1:] * (1 - p) + distribution[:-1] * p
        distribution[0] *= 1 - p
    return float(distribution[k:].sum())


def almost_full_volume(x: Sequence[float]) -> float:
    """The k = d-1 case in closed form: sum_l prod_{j != l} x_j - (d-1) prod x_j."""
    x = _as_cube_point(x)
    d = x.shape[0]
    if d < 2:
        raise ValidationError("d must be >= 2")
    leave_one_out = sum(float(np.prod(np.delete(x, ell))) for ell in range(d))
    return leave_one_out - (d - 1) * float(np.prod(x))


def skyline_integrand(x: Sequence[float], n: int, k: int) -> float:
    """n (1 - |B_k(x)|)^(n-1); its integral over the cube is E[M_{d,k}(n)]."""
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    return n * (1.0 - dominating_volume(x, k)) ** (n - 1)
