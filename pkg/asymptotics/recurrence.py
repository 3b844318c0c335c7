import logging
import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

import mpmath
import numpy as np
from scipy import integrate, interpolate, optimize

from analytics import ExactValue
from config import QuadratureConfig
from utils import ValidationError, require
from .predictors import WORKING_DIGITS, correction_terms, rho
from .special import gamma_power, log_gamma


logger = logging.getLogger(__name__)

MAX_NUMERIC_DIMENSION = 5
TRUNCATION_RATIO = 1e-16


def sigma_by_compositions(m: int, ell: int) -> int:
    """Sum of multinomial(ell; j_1..j_{m+1}) over compositions of ell into m+1 positive parts."""
    total = 0
    for cuts in combinations(range(1, ell), m):
        bounds = (0,) + cuts + (ell,)
        parts = [bounds[i + 1] - bounds[i] for i in range(m + 1)]
        coefficient = math.factorial(ell)
        for part in parts:
            coefficient //= math.factorial(part)
        total += coefficient
    return total


def sigma_by_inclusion_exclusion(m: int, ell: int) -> int:
    return sum(math.comb(m + 1, r) * (-1) ** (m + 1 - r) * r ** ell for r in range(1, m + 2))


@lru_cache(maxsize=None)
def _sigma(m: int, ell: int) -> int:
    by_compositions = sigma_by_compositions(m, ell)
    by_signs = sigma_by_inclusion_exclusion(m, ell)
    if by_compositions != by_signs:
        raise ArithmeticError(f"sigma_{m}({ell}) disagrees: {by_compositions} vs {by_signs}")
    return by_compositions


def sigma_m(m: int, ell: int) -> ExactValue:
    require(m >= 0, f"m must be >= 0, got {m}")
    require(ell >= 1, f"ell must be >= 1, got {ell}")
    return ExactValue(Fraction(_sigma(m, ell)))


def phi_operator_power_gd(m: int, n: float, d: int) -> float:
    """Phi^m[g_d](n): the g_d sum restricted to l > m with each term weighted by sigma_m(l)."""
    require(m >= 0, f"m must be >= 0, got {m}")
    if d < 3:
        raise ValidationError(f"phi_operator_power_gd needs d >= 3, got {d}")
    terms = correction_terms(n, d)
    with mpmath.workdps(WORKING_DIGITS):
        return float(mpmath.fsum(
            (-1) ** (ell - 1) * terms[ell] * _sigma(m, ell) for ell in range(m + 1, d - 1)
        ))


def f2(m: float) -> float:
    return 2.0 * math.exp(-m) - math.exp(-2.0 * m)


def f_d_leading(n: float, d: int) -> float:
    """Leading behaviour of f_d(n) for d = 2..5."""
    require(n > 0, f"n must be positive, got {n}")
    if d == 2:
        return f2(n)
    if d == 3:
        return 3.0 * n ** -0.5
    if d == 4:
        return 4.0 * math.pi ** 1.5 * n ** (-1.0 / 6.0)
    if d == 5:
        head = 80.0 * math.pi ** 4 / (9.0 * gamma_power(2.0 / 3.0, 4))
        return head * n ** (-1.0 / 12.0) - 60.0 * math.pi ** 1.5 * n ** -0.25
    raise ValidationError(f"leading forms are tabulated for 2 <= d <= 5, got {d}")


def f_d_asymptotic(n: float, d: int) -> float:
    """(1 - e^-rho)/(2 - e^-rho) Gamma(1/(d-1))^d / (d-1)"""
    if d < 3:
        raise ValidationError(f"f_d_asymptotic needs d >= 3, got {d}")
    decay = math.exp(-rho(n, d))
    return (1.0 - decay) / (2.0 - decay) * math.exp(d * log_gamma(1.0 / (d - 1))) / (d - 1)


def _g_coefficients(level: int) -> List[Tuple[float, float]]:
    # g_L(m) = sum_j coefficient_j * m^exponent_j
    pairs = []
    for j in range(1, level - 1):
        a = level - 1 - j
        coefficient = (-1) ** (j - 1) * math.comb(level, j) * a ** (j - 1) * gamma_power(1.0 / a, level - j)
        pairs.append((coefficient, 1.0 / (level - 1) - 1.0 / a))
    return pairs


def truncation_point(a: int, power: int) -> float:
    """s beyond which e^{-s/a} s^power stays below TRUNCATION_RATIO of its peak."""
    peak = power * a
    log_peak = -peak / a + (power * math.log(peak) if power else 0.0)
    log_floor = log_peak + math.log(TRUNCATION_RATIO)

    def excess(s: float) -> float:
        return -s / a + power * math.log(s) - log_floor

    return optimize.brentq(excess, max(peak, 1e-9) + 1e-9, 1e4)


class FdRecurrence:
    """
    Numeric f_d through

        f_L(m) = g_L(m) + sum_{1<=j<=L-2} binom(L,j) (-1)^j m^(1/(L-1) - 1/(L-1-j)) / (j-1)!
                 * int_0^inf e^(-s/(L-1-j)) s^(j-1) f_{L-j}(m e^s) ds

    with f_2 explicit. Lower levels are tabulated once on a log-spaced grid of
    m starting at n and interpolated with cubic splines; the tables are not
    modified after construction.
    """

    def __init__(self, n: float, d: int, config: Optional[QuadratureConfig] = None,
                 step: float = 0.2):
        require(n > 0, f"n must be positive, got {n}")
        if not 2 <= d <= MAX_NUMERIC_DIMENSION:
            raise ValidationError(f"f_d_numeric supports 2 <= d <= {MAX_NUMERIC_DIMENSION}, got {d}")
        self.n = float(n)
        self.d = d
        self.config = config or QuadratureConfig()
        self.step = step
        self.logger = logging.getLogger(__name__)
        self.span = max(
            (truncation_point(level - 1 - j, j - 1) for level in range(3, d + 1) for j in range(1, level - 1)),
            default=0.0,
        ) + 1.0
        self.tables: Dict[int, Callable[[float], float]] = {}
        for level in range(3, d):
            self.tables[level] = self._build_table(level)

    def _evaluator(self, level: int) -> Callable[[float], float]:
        if level == 2:
            return f2
        return self.tables[level]

    def _build_table(self, level: int) -> Callable[[float], float]:
        reach = (self.d - level) * self.span
        xs = math.log(self.n) + np.arange(0.0, reach + 2 * self.step, self.step)
        ys = np.array([self.level_value(level, math.exp(x)) for x in xs])
        spline = interpolate.CubicSpline(xs, ys)
        self.logger.debug(f"Tabulated f_{level} on {xs.size} points over log m in [{xs[0]:.2f}, {xs[-1]:.2f}]")
        return lambda m: float(spline(math.log(m)))

    def level_value(self, level: int, m: float) -> float:
        if level == 2:
            return f2(m)
        total = sum(c * m ** e for c, e in _g_coefficients(level))
        for j in range(1, level - 1):
            a = level - 1 - j
            inner = self._evaluator(level - j)
            upper = truncation_point(a, j - 1)

            def integrand(s: float, a=a, j=j, inner=inner) -> float:
                return math.exp(-s / a) * s ** (j - 1) * inner(m * math.exp(s))

            integral, _ = integrate.quad(
                integrand, 0.0, upper,
                epsabs=self.config.abs_tol, epsrel=self.config.rel_tol, limit=self.config.limit,
            )
            prefactor = math.comb(level, j) * (-1) ** j * m ** (1.0 / (level - 1) - 1.0 / a) / math.factorial(j - 1)
            total += prefactor * integral
        return total

    def value(self) -> float:
        return self.level_value(self.d, self.n)


def f_d_numeric(n: float, d: int, config: Optional[QuadratureConfig] = None) -> float:
    if d == 2:
        require(n > 0, f"n must be positive, got {n}")
        return f2(n)
    return FdRecurrence(n, d, config).value()
