import logging
import math
from typing import Optional, Tuple

from scipy import integrate, special

from config import QuadratureConfig
from utils import ValidationError, check_k, require
from .exact import beta


logger = logging.getLogger(__name__)

MAX_SERIES_TERMS = 400


def _check_point(n: int, x: float):
    require(n >= 1, f"n must be >= 1, got {n}")
    if not 0.0 < x <= 1.0:
        raise ValidationError(f"x must lie in (0, 1], got {x}")


def lower_bound_integral(n: int, x: float, config: Optional[QuadratureConfig] = None) -> float:
    """
    I_n(x) = x * int_x^1 t^-2 (1-t)^(n-1) dt by adaptive Gauss-Kronrod quadrature.

    With t = x e^s the integral becomes int_0^{-log x} e^-s (1 - x e^s)^(n-1) ds,
    whose integrand is bounded by 1 however small x is.
    """
    config = config or QuadratureConfig()
    _check_point(n, x)
    if x == 1.0:
        return 0.0

    upper = -math.log(x)

    def integrand(s: float) -> float:
        u = x * math.exp(s)
        if u >= 1.0:
            return 0.0
        return math.exp(-s + (n - 1) * math.log1p(-u))

    # t = x + c/n, where (1-t)^(n-1) starts to bite
    breaks = [math.log1p(c / (n * x)) for c in (0.1, 1.0, 10.0, 50.0)]
    breaks = [s for s in breaks if 0.0 < s < upper]
    value, _ = integrate.quad(
        integrand, 0.0, upper,
        points=breaks or None,
        epsabs=0.0 if breaks else config.abs_tol,
        epsrel=config.rel_tol,
        limit=config.limit,
    )
    return max(value, 0.0)


def lower_bound_series(n: int, x: float, max_terms: int = MAX_SERIES_TERMS) -> Tuple[float, float]:
    """
    Repeated integration by parts:
    I_n(x) ~ sum_j (-1)^j (j+1)! / (n (n+1) ... (n+j)) * x^(-j-1) (1-x)^(n+j).

    The series is asymptotic; it is cut at its smallest term and the first
    omitted term is returned as the error estimate.
    """
    _check_point(n, x)
    if x == 1.0:
        return 0.0, 0.0

    log_x = math.log(x)
    log_rest = math.log1p(-x)
    log_rising = 0.0
    total = 0.0
    previous = math.inf
    for j in range(max_terms):
        log_rising += math.log(n + j)
        log_term = math.lgamma(j + 2) - log_rising - (j + 1) * log_x + (n + j) * log_rest
        term = math.exp(log_term)
        if term >= previous:
            return total, previous
        if term <= 1e-17 * abs(total):
            return total, term
        total += term if j % 2 == 0 else -term
        previous = term
    return total, previous


def lower_bound_value(n: int, x: float, config: Optional[QuadratureConfig] = None) -> float:
    """I_n(x), taking the series path when n*x is large enough and the series converges."""
    config = config or QuadratureConfig()
    _check_point(n, x)
    if n * x >= config.series_switch:
        value, error = lower_bound_series(n, x)
        if value > 0 and error <= config.rel_tol * value:
            return value
        logger.debug(f"Series for I_{n}({x}) too coarse (error {error:.2e}), using quadrature")
    return lower_bound_integral(n, x, config)


def lower_bound(n: int, d: int, k: int, config: Optional[QuadratureConfig] = None) -> float:
    """n * I_n(beta_{d,k}), a lower bound on the expected k-dominant skyline size."""
    require(n >= 1, f"n must be >= 1, got {n}")
    check_k(k, d - 1)
    return n * lower_bound_value(n, float(beta(d, k)), config)


def lower_bound_limit(c: float) -> float:
    """I_n(c/n) tends to the exponential integral E_2(c) as n grows."""
    require(c > 0, f"c must be positive, got {c}")
    return float(special.expn(2, c))
