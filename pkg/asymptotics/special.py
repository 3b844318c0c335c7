import math

from scipy import special

from utils import ValidationError


HALLEY_MAX_ITERATIONS = 100


def lambert_w(x: float) -> float:
    """
    Principal branch of W, W(x) e^W(x) = x, for x >= 0.

    Halley iteration seeded with x(1 - x) for small x, log1p(x) up to e and
    the expansion log x - log log x + log log x / log x beyond.
    """
    x = float(x)
    if x < 0 or math.isnan(x):
        raise ValidationError(f"lambert_w is defined here for x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf

    if x < 0.1:
        w = x * (1.0 - x)
    elif x <= math.e:
        w = math.log1p(x)
    else:
        l1 = math.log(x)
        l2 = math.log(l1)
        w = l1 - l2 + l2 / l1

    for _ in range(HALLEY_MAX_ITERATIONS):
        ew = math.exp(w)
        residual = w * ew - x
        w1 = w + 1.0
        dw = residual / (ew * w1 - (w + 2.0) * residual / (2.0 * w1))
        w -= dw
        if abs(dw) < 0.7e-16 * (2.0 + abs(w)):
            break
    return w


def log_gamma(x: float) -> float:
    return float(special.gammaln(x))


def gamma_power(a: float, power: float) -> float:
    """Gamma(a)^power evaluated in log space."""
    return math.exp(power * log_gamma(a))
