import logging
import math
from typing import List, Optional

import mpmath

from config import PrecisionConfig, ThresholdKind
from utils import require
from .base import ThresholdResult
from .special import lambert_w


logger = logging.getLogger(__name__)

LOG_2PI = math.log(2.0 * math.pi)


def _fractional(x: float) -> float:
    return x - math.floor(x)


def phi0(x: float, tau: Optional[float] = None) -> float:
    """e^{-{x}} x^{-2{x}}; equals 1 at integers and lies in (0, 1] for x > 1. `tau` overrides {x}."""
    tau = _fractional(x) if tau is None else tau
    return math.exp(-tau) * x ** (-2.0 * tau)


def phi1(x: float, tau: Optional[float] = None) -> float:
    """e^{1-{x}} x^{2-2{x}}; at least 1 for x > 1. `tau` overrides {x}."""
    tau = _fractional(x) if tau is None else tau
    return math.exp(1.0 - tau) * x ** (2.0 - 2.0 * tau)


def d0_scale(n: int) -> float:
    """sqrt(2 log n / W(2 log n))"""
    two_log_n = 2.0 * math.log(n)
    return math.sqrt(two_log_n / lambert_w(two_log_n))


def d0_boundaries(imax: int) -> List[int]:
    """a_i = i^(i^2), with a_1 = 2: d0 = i+1 exactly for a_i <= n < a_{i+1}."""
    require(imax >= 1, f"imax must be >= 1, got {imax}")
    return [2] + [i ** (i * i) for i in range(2, imax + 1)]


def threshold_d0(n: int) -> ThresholdResult:
    """d0 = floor(sqrt(2 log n / W(2 log n))) + 1, decided by big-integer boundaries."""
    n = int(n)
    require(n >= 2, f"threshold_d0 needs n >= 2, got {n}")
    i = 1
    while (i + 1) ** ((i + 1) ** 2) <= n:
        i += 1
    boundaries = d0_boundaries(i + 1)

    x = d0_scale(n)
    # i^(i^2) <= n fixes floor(x) = i; keep the fractional part consistent with it
    tau = 0.0 if n == i ** (i * i) else min(max(x - i, 0.0), math.nextafter(1.0, 0.0))
    oscillators = {
        "x": x,
        "tau": tau,
        "phi0": phi0(x, tau),
        "phi1": phi1(x, tau),
    }
    return ThresholdResult(n=n, kind=ThresholdKind.D0, value=i + 1, boundaries=boundaries, oscillators=oscillators)


def _d1_boundary(i: int, digits: int) -> int:
    with mpmath.workdps(digits):
        h = mpmath.mpf(i) - mpmath.mpf(1) / 2
        return int(mpmath.floor(mpmath.power(h / mpmath.e, h))) + 1


def d1_boundary(i: int, precision: Optional[PrecisionConfig] = None) -> int:
    """
    a_i = floor(((i - 1/2)/e)^(i - 1/2)) + 1, computed with guard digits and
    accepted only when doubling the precision reproduces it.
    """
    precision = precision or PrecisionConfig()
    require(i >= 1, f"i must be >= 1, got {i}")
    h = i - 0.5
    magnitude = max(1, int(h * max(0.0, math.log10(h / math.e))) + 1)
    digits = magnitude + precision.guard_digits
    value = _d1_boundary(i, digits)
    check = _d1_boundary(i, 2 * digits)
    if value != check:
        raise ArithmeticError(f"a_{i} is unstable under precision doubling ({value} vs {check})")
    return value


def d1_boundaries(imax: int, precision: Optional[PrecisionConfig] = None) -> List[int]:
    require(imax >= 1, f"imax must be >= 1, got {imax}")
    return [d1_boundary(i, precision) for i in range(1, imax + 1)]


def tau_d1(n: float) -> float:
    """Fractional part of log n / W(log n / e) + 1/2."""
    log_n = math.log(n)
    return _fractional(log_n / lambert_w(log_n / math.e) + 0.5)


def threshold_d1(n: int, precision: Optional[PrecisionConfig] = None) -> ThresholdResult:
    """Largest i with a_i <= n."""
    n = int(n)
    require(n >= 3, f"threshold_d1 needs n >= 3, got {n}")
    boundaries = [d1_boundary(1, precision)]
    while True:
        nxt = d1_boundary(len(boundaries) + 1, precision)
        boundaries.append(nxt)
        if nxt > n:
            break
    value = max(i for i, a in enumerate(boundaries, start=1) if a <= n)
    oscillators = {"tau": tau_d1(n)}
    return ThresholdResult(n=n, kind=ThresholdKind.D1, value=value, boundaries=boundaries, oscillators=oscillators)


def _upsilon_parts(n: float):
    log_n = math.log(n)
    w = lambert_w(log_n / math.e)
    offset = (1.0 + 0.5 * LOG_2PI) / (w + 1.0)
    slope = w / (log_n * (w + 1.0))
    shift = (
        12 * w ** 3
        + (35 - 12 * LOG_2PI) * w ** 2
        + (34 - 24 * LOG_2PI) * w
        + 23
        + LOG_2PI ** 2
    ) / (24 * (w + 1.0) ** 3)
    return offset, slope, shift


def upsilon(t: float, n: float) -> float:
    """Fractional offset tau_n at which E[C_{n,d1}] is about e^t."""
    require(n > math.e, f"upsilon needs log n > 1, got n={n}")
    offset, slope, shift = _upsilon_parts(n)
    return offset + slope * (t - shift)


def upsilon_inverse(tau: float, n: float) -> float:
    """The t with upsilon(t, n) = tau."""
    require(n > math.e, f"upsilon needs log n > 1, got n={n}")
    offset, slope, shift = _upsilon_parts(n)
    return (tau - offset) / slope + shift
