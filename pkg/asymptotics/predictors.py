import logging
import math
from typing import List

import mpmath

from utils import ValidationError, check_k, require
from .special import gamma_power, lambert_w, log_gamma


logger = logging.getLogger(__name__)

WORKING_DIGITS = 40


def correction_terms(n: float, d: int) -> List[mpmath.mpf]:
    """
    Unsigned terms t_j, 0 <= j <= d-2, of the first-correction expansion:
    t_j = binom(d,j) (d-1-j)^(j-1) Gamma(1/(d-1-j))^(d-j) n^(1/(d-1) - 1/(d-1-j)).
    """
    require(d >= 2, f"d must be >= 2, got {d}")
    require(n >= 1, f"n must be >= 1, got {n}")
    with mpmath.workdps(WORKING_DIGITS):
        n = mpmath.mpf(n)
        terms = []
        for j in range(d - 1):
            a = d - 1 - j
            log_term = (
                mpmath.log(mpmath.binomial(d, j))
                + (j - 1) * mpmath.log(a)
                + (d - j) * mpmath.loggamma(mpmath.mpf(1) / a)
                + (mpmath.mpf(1) / (d - 1) - mpmath.mpf(1) / a) * mpmath.log(n)
            )
            terms.append(mpmath.exp(log_term))
        return terms


def phi_d(n: float, d: int) -> float:
    """Leading term Gamma(1/(d-1))^d n^(-1/(d-1)) / (d-1) of E[M_{d,d-1}(n)]."""
    if d < 2:
        raise ValidationError(f"phi_d needs d >= 2, got {d}")
    require(n >= 1, f"n must be >= 1, got {n}")
    return math.exp(d * log_gamma(1.0 / (d - 1)) - math.log(d - 1) - math.log(n) / (d - 1))


def g_d(n: float, d: int) -> float:
    """
    First-correction sum over 1 <= j <= d-2 with alternating signs.

    Returned unscaled: the correction subtracted from phi_d is n^(-1/(d-1)) g_d(n),
    so phi_minus_g(n, d) == phi_d(n, d) - n^(-1/(d-1)) * g_d(n, d).
    """
    if d < 3:
        raise ValidationError(f"g_d needs d >= 3, got {d}")
    terms = correction_terms(n, d)
    with mpmath.workdps(WORKING_DIGITS):
        return float(mpmath.fsum((-1) ** (j - 1) * terms[j] for j in range(1, d - 1)))


def phi_minus_g(n: float, d: int) -> float:
    """phi_d(n) - n^(-1/(d-1)) g_d(n), the moderate-range predictor of E[M_{d,d-1}(n)]."""
    if d < 3:
        raise ValidationError(f"phi_minus_g needs d >= 3, got {d}")
    terms = correction_terms(n, d)
    with mpmath.workdps(WORKING_DIGITS):
        total = mpmath.fsum((-1) ** j * terms[j] for j in range(d - 1))
        return float(total * mpmath.power(mpmath.mpf(n), -mpmath.mpf(1) / (d - 1)))


def rho(n: float, d: int) -> float:
    """Critical-range parameter d / (e n^(1/d^2))."""
    require(d >= 1 and n >= 1, f"need n >= 1 and d >= 1 (n={n}, d={d})")
    return d / (math.e * math.exp(math.log(n) / (d * d)))


def critical_estimate(n: float, d: int) -> float:
    """phi_d / (2 - e^-rho), the main term in the critical range."""
    if d < 3:
        raise ValidationError(f"critical_estimate needs d >= 3, got {d}")
    return phi_d(n, d) / (2.0 - math.exp(-rho(n, d)))


def m_d1_mean(n: float, d: int) -> float:
    """E[M_{d,1}(n)] = n^(1-d), exact."""
    require(n >= 1 and d >= 1, f"need n >= 1 and d >= 1 (n={n}, d={d})")
    return float(n) ** (1 - d)


def m_dk_upper(n: float, d: int, k: int) -> float:
    """Order of magnitude n^(1-d/k) of E[M_{d,k}(n)]; a bound, not an estimate."""
    require(n >= 1, f"n must be >= 1, got {n}")
    check_k(k, d)
    return float(n) ** (1.0 - d / k)


def simplex_skyline_mean(n: int, d: int) -> float:
    """n sum_{j<d} binom(d-1,j) (-1)^j Gamma(n) Gamma((j+1)/d) / Gamma(n + (j+1)/d)"""
    require(n >= 1 and d >= 1, f"need n >= 1 and d >= 1 (n={n}, d={d})")
    with mpmath.workdps(WORKING_DIGITS + 10):
        total = mpmath.mpf(0)
        for j in range(d):
            s = mpmath.mpf(j + 1) / d
            log_ratio = mpmath.loggamma(n) + mpmath.loggamma(s) - mpmath.loggamma(n + s)
            total += (-1) ** j * mpmath.binomial(d - 1, j) * mpmath.exp(log_ratio)
        return float(n * total)


def simplex_skyline_leading(n: float, d: int) -> float:
    return math.exp(log_gamma(1.0 / d) + (1.0 - 1.0 / d) * math.log(n))


def cloud_coefficient(d: int, j: int) -> float:
    """c_{d,j} = Gamma(1/(d-1))^d / (d-1) * binom(j + 1/(d-1), j)."""
    if d < 3 or j < 0:
        raise ValidationError(f"cloud_coefficient needs d >= 3 and j >= 0 (d={d}, j={j})")
    a = 1.0 / (d - 1)
    log_binomial = log_gamma(j + a + 1) - log_gamma(j + 1) - log_gamma(a + 1)
    return gamma_power(a, d) / (d - 1) * math.exp(log_binomial)


def cycle_mean_log(n: float, d: int) -> float:
    """log of binom(n,d) d!^(2-d) / d; the falling factorial is summed term by term."""
    if d < 2 or n < d:
        raise ValidationError(f"cycle mean needs n >= d >= 2 (n={n}, d={d})")
    log_d_factorial = math.lgamma(d + 1)
    # lgamma(n+1) - lgamma(n-d+1) cancels badly once n is large
    log_falling = math.fsum(math.log(n - i) for i in range(d))
    return log_falling + (1 - d) * log_d_factorial - math.log(d)


def cycle_mean_asym(n: float, d: int) -> float:
    log_value = cycle_mean_log(n, d)
    if log_value > 700:
        raise ValidationError(f"cycle mean exceeds the float range (log value {log_value:.3f})")
    return math.exp(log_value)


def moderate_range_margin(n: float, d: int) -> float:
    """2 log n / d^2 - W(2 log n); the moderate-d estimates need this large."""
    log_n = math.log(n)
    return 2.0 * log_n / (d * d) - lambert_w(2.0 * log_n)


def critical_range_bounds(n: float):
    """(lower, upper) for d in the critical range: d >> (log n)^(1/3), d <= 2 sqrt(log n / W(...))."""
    log_n = math.log(n)
    lower = log_n ** (1.0 / 3.0)
    upper = 2.0 * math.sqrt(log_n / lambert_w(4.0 * log_n / (math.e * math.log(2.0)) ** 2))
    return lower, upper


def validity_note(n: float, d: int) -> str:
    if n < 2:
        return "range conditions need n >= 2"
    notes = []
    margin = moderate_range_margin(n, d)
    if margin > 0:
        notes.append(f"moderate-d range holds (2log n/d^2 - W(2log n) = {margin:.4g} > 0)")
    else:
        notes.append(f"moderate-d range fails (2log n/d^2 - W(2log n) = {margin:.4g})")
    lower, upper = critical_range_bounds(n)
    if lower < d <= upper:
        notes.append(f"critical range holds ({lower:.4g} < d <= {upper:.4g})")
    else:
        notes.append(f"critical range fails (needs {lower:.4g} < d <= {upper:.4g})")
    return "; ".join(notes)
