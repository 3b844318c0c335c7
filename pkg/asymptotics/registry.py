import logging
import math
from typing import Callable, Dict, Optional, Union

from config import FormulaId
from utils import ValidationError
from .base import PredictionReport
from . import predictors
from .recurrence import f_d_leading


logger = logging.getLogger(__name__)


def _need(value: Optional[Union[int, float]], name: str, formula: FormulaId) -> Union[int, float]:
    if value is None:
        raise ValidationError(f"formula {formula.value} needs --{name}")
    return value


def _phi_d(n, d, k, j):
    return predictors.phi_d(n, d), {}


def _g_d(n, d, k, j):
    return predictors.g_d(n, d), {}


def _phi_minus_g(n, d, k, j):
    return predictors.phi_minus_g(n, d), {
        "phi_d": predictors.phi_d(n, d),
        "scaled_g_d": predictors.g_d(n, d) * float(n) ** (-1.0 / (d - 1)),
    }


def _critical(n, d, k, j):
    return predictors.critical_estimate(n, d), {"rho": predictors.rho(n, d), "phi_d": predictors.phi_d(n, d)}


def _m_d1(n, d, k, j):
    return predictors.m_d1_mean(n, d), {}


def _m_dk_upper(n, d, k, j):
    return predictors.m_dk_upper(n, d, k), {}


def _simplex(n, d, k, j):
    return predictors.simplex_skyline_mean(int(n), d), {"leading": predictors.simplex_skyline_leading(n, d)}


def _cloud(n, d, k, j):
    coefficient = predictors.cloud_coefficient(d, j)
    return coefficient, {"layer_estimate": coefficient * float(n) ** (-1.0 / (d - 1))}


def _cycle_asym(n, d, k, j):
    return predictors.cycle_mean_asym(n, d), {"log_value": predictors.cycle_mean_log(n, d)}


def _f_d_leading(n, d, k, j):
    return f_d_leading(n, d), {}


FORMULAS: Dict[FormulaId, Callable] = {
    FormulaId.PHI_D: _phi_d,
    FormulaId.G_D: _g_d,
    FormulaId.PHI_MINUS_G: _phi_minus_g,
    FormulaId.CRITICAL_ESTIMATE: _critical,
    FormulaId.M_D1: _m_d1,
    FormulaId.M_DK_UPPER: _m_dk_upper,
    FormulaId.SIMPLEX_SKYLINE: _simplex,
    FormulaId.CLOUD_COEFF: _cloud,
    FormulaId.CYCLE_MEAN_ASYM: _cycle_asym,
    FormulaId.F_D_LEADING: _f_d_leading,
}


def predict(formula: Union[str, FormulaId], n: float, d: int,
            k: Optional[int] = None, j: Optional[int] = None) -> PredictionReport:
    """Evaluate one predictor and attach the range conditions it was derived under."""
    try:
        formula = FormulaId(formula)
    except ValueError:
        raise ValidationError(f"unknown formula id {formula!r}; known: {[f.value for f in FormulaId]}")

    n = _need(n, "n", formula)
    d = _need(d, "d", formula)
    if formula == FormulaId.M_DK_UPPER:
        k = _need(k, "k", formula)
    if formula == FormulaId.CLOUD_COEFF:
        j = _need(j, "j", formula)

    value, extras = FORMULAS[formula](n, d, k, j)
    params = {"n": n, "d": d}
    if k is not None:
        params["k"] = k
    if j is not None:
        params["j"] = j

    if formula == FormulaId.M_DK_UPPER:
        note = "order-of-magnitude bound n^(1-d/k), not an estimate"
    elif formula == FormulaId.M_D1:
        note = "exact for every n and d"
    elif formula == FormulaId.SIMPLEX_SKYLINE:
        note = "exact finite-n sum; leading term Gamma(1/d) n^(1-1/d) in extras"
    else:
        note = predictors.validity_note(n, d)
        if formula == FormulaId.CRITICAL_ESTIMATE:
            note += "; main term only, the correction is not quantified"

    logger.debug(f"predict {formula.value} {params} = {value}")
    return PredictionReport(
        formula_id=formula,
        params=params,
        value=float(value),
        validity_note=note,
        is_bound=formula == FormulaId.M_DK_UPPER,
        extras={key: float(v) for key, v in extras.items() if math.isfinite(v)},
    )
