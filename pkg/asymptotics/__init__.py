"""
Asymptotics Package

Special functions, asymptotic predictors of k-dominant skyline sizes, the
dimension thresholds d0/d1 with their exact boundary sequences, and the
f_d recurrence objects.
"""

from .base import PredictionReport, ThresholdResult
from .special import lambert_w, log_gamma, gamma_power
from .predictors import (
    phi_d,
    g_d,
    phi_minus_g,
    rho,
    critical_estimate,
    m_d1_mean,
    m_dk_upper,
    simplex_skyline_mean,
    simplex_skyline_leading,
    cloud_coefficient,
    cycle_mean_asym,
    cycle_mean_log,
    validity_note,
)
from .thresholds import (
    phi0,
    phi1,
    d0_scale,
    d0_boundaries,
    d1_boundary,
    d1_boundaries,
    threshold_d0,
    threshold_d1,
    tau_d1,
    upsilon,
    upsilon_inverse,
)
from .recurrence import (
    sigma_m,
    phi_operator_power_gd,
    f_d_leading,
    f_d_asymptotic,
    f_d_numeric,
    FdRecurrence,
)
from .registry import predict, FORMULAS

__all__ = [
    'PredictionReport',
    'ThresholdResult',

    # Special functions
    'lambert_w',
    'log_gamma',
    'gamma_power',

    # Predictors
    'phi_d',
    'g_d',
    'phi_minus_g',
    'rho',
    'critical_estimate',
    'm_d1_mean',
    'm_dk_upper',
    'simplex_skyline_mean',
    'simplex_skyline_leading',
    'cloud_coefficient',
    'cycle_mean_asym',
    'cycle_mean_log',
    'validity_note',
    'predict',
    'FORMULAS',

    # Thresholds
    'phi0',
    'phi1',
    'd0_scale',
    'd0_boundaries',
    'd1_boundary',
    'd1_boundaries',
    'threshold_d0',
    'threshold_d1',
    'tau_d1',
    'upsilon',
    'upsilon_inverse',

    # Recurrence objects
    'sigma_m',
    'phi_operator_power_gd',
    'f_d_leading',
    'f_d_asymptotic',
    'f_d_numeric',
    'FdRecurrence',
]
