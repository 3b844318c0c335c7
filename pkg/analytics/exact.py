import logging
import math
from fractions import Fraction
from itertools import accumulate
from typing import List

import mpmath

from config import PrecisionConfig
from utils import ValidationError, check_k, require
from .base import ExactValue


logger = logging.getLogger(__name__)

# nested-sum layer means are computed in rationals up to this sample size
EXACT_LAYER_MAX_N = 200


def harmonic(n: int, a: int) -> ExactValue:
    """H_n^(a) = sum_{1<=j<=n} j^-a"""
    require(n >= 1, f"harmonic numbers need n >= 1, got {n}")
    require(a >= 1, f"harmonic order must be >= 1, got {a}")
    return ExactValue(sum((Fraction(1, j ** a) for j in range(1, n + 1)), Fraction(0)))


def _mu_recurrence(harmonics: List, d: int, one):
    # mu_1 = 1, mu_m = (m-1)^-1 sum_{1<=j<=m-1} H^(m-j) mu_j
    mu = [None, one]
    for m in range(2, d + 1):
        total = sum(harmonics[m - j] * mu[j] for j in range(1, m))
        mu.append(total / (m - 1))
    return mu[d]


def skyline_mean(n: int, d: int, precision: PrecisionConfig = None) -> float:
    """Expected skyline size of n uniform points in the d-cube."""
    require(n >= 1 and d >= 1, f"need n >= 1 and d >= 1 (n={n}, d={d})")
    precision = precision or PrecisionConfig()
    with mpmath.workdps(precision.internal_digits):
        harmonics = [None]
        for a in range(1, d):
            if a == 1:
                harmonics.append(mpmath.harmonic(n))
            else:
                harmonics.append(mpmath.zeta(a) - mpmath.zeta(a, n + 1))
        return float(_mu_recurrence(harmonics, d, mpmath.mpf(1)))


def skyline_mean_exact(n: int, d: int) -> ExactValue:
    require(n >= 1 and d >= 1, f"need n >= 1 and d >= 1 (n={n}, d={d})")
    harmonics = [None] + [harmonic(n, a).value for a in range(1, d)]
    return ExactValue(_mu_recurrence(harmonics, d, Fraction(1)))


def _check_layer(n: int, d: int, j: int):
    require(n >= 1 and d >= 1, f"need n >= 1 and d >= 1 (n={n}, d={d})")
    if not 0 <= j <= n - 1:
        raise ValidationError(f"j must satisfy 0 <= j <= n-1 (j={j}, n={n})")


def layer_mean_full_exact(n: int, d: int, j: int) -> ExactValue:
    """sum over j < i_1 <= ... <= i_{d-1} <= n of 1/(i_1 ... i_{d-1})"""
    _check_layer(n, d, j)
    if d == 1:
        return ExactValue(Fraction(1))
    indices = range(j + 1, n + 1)
    level = [Fraction(1, i) for i in indices]
    for _ in range(d - 2):
        level = [partial / i for i, partial in zip(indices, accumulate(level))]
    return ExactValue(sum(level, Fraction(0)))


def _layer_mean_beta(n: int, d: int, j: int, digits: int) -> float:
    # n/(d-1)! binom(n-1,j) int_0^1 t^j (1-t)^(n-1-j) (-log t)^(d-1) dt, written as the
    # (d-1)-th a-derivative of B(a, n-j) at a=j+1 divided by B itself: a complete Bell
    # polynomial in the polygamma differences of log B.
    m = d - 1
    with mpmath.workdps(digits):
        a = mpmath.mpf(j + 1)
        b = mpmath.mpf(n - j)
        kappa = [None] + [mpmath.psi(i - 1, a) - mpmath.psi(i - 1, a + b) for i in range(1, m + 1)]
        bell = [mpmath.mpf(1)]
        for r in range(m):
            bell.append(sum(mpmath.binomial(r, i) * kappa[i + 1] * bell[r - i] for i in range(r + 1)))
        return float((-1) ** m * bell[m] / mpmath.factorial(m))


def layer_mean_full(n: int, d: int, j: int, precision: PrecisionConfig = None) -> float:
    """Expected number of points d-dominated by exactly j others (hypercube model)."""
    _check_layer(n, d, j)
    if n <= EXACT_LAYER_MAX_N:
        return float(layer_mean_full_exact(n, d, j))
    precision = precision or PrecisionConfig()
    logger.debug(f"Layer mean n={n} d={d} j={j} through the Beta-integral form")
    return _layer_mean_beta(n, d, j, precision.internal_digits)


def layer_mean_full_asymptotic(n: int, d: int, j: int) -> float:
    _check_layer(n, d, j)
    return math.log(n / (j + 1)) ** (d - 1) / math.factorial(d - 1)


def layer_mean_one(n: int, d: int, j: int, precision: PrecisionConfig = None) -> float:
    """1-dominance clouds are the mirror image of full-dominance clouds."""
    _check_layer(n, d, j)
    return layer_mean_full(n, d, n - 1 - j, precision)


def layer_mean_one_asymptotic(n: int, d: int, j: int) -> float:
    _check_layer(n, d, j)
    return math.comb(j + d - 1, j) * float(n) ** (1 - d)


def cycle_mean(n: int, d: int) -> ExactValue:
    """Expected number of (d-1)-dominant cycles of length d among n cube points."""
    if d < 2 or n < d:
        raise ValidationError(f"cycle mean needs n >= d >= 2 (n={n}, d={d})")
    return ExactValue(Fraction(math.comb(n, d)) * Fraction(math.factorial(d)) ** (2 - d) / d)


def beta(d: int, k: int) -> ExactValue:
    """Probability that one uniform point k-dominates another."""
    check_k(k, d)
    return ExactValue(Fraction(sum(math.comb(d, j) for j in range(d - k + 1)), 2 ** d))
