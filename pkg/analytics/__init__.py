"""
Analytics Package

Exact, non-asymptotic expectations: harmonic recurrences for skyline sizes,
cloud (layer) means, categorical grid sums, cycle expectations and the
Markov-type lower bound on k-dominant skyline sizes.
"""

from .base import ExactValue
from .exact import (
    harmonic,
    skyline_mean,
    skyline_mean_exact,
    layer_mean_full,
    layer_mean_full_exact,
    layer_mean_full_asymptotic,
    layer_mean_one,
    layer_mean_one_asymptotic,
    cycle_mean,
    beta,
)
from .categorical import (
    categorical_volume,
    categorical_mean,
    categorical_mean_two_level,
    categorical_mean_weighted,
    categorical_limit,
    categorical_limit_uniform,
    categorical_variance_limit,
)
from .bounds import (
    lower_bound,
    lower_bound_value,
    lower_bound_integral,
    lower_bound_series,
    lower_bound_limit,
)
from .volumes import dominating_volume, almost_full_volume, skyline_integrand

__all__ = [
    'ExactValue',

    # Harmonic recurrences and clouds
    'harmonic',
    'skyline_mean',
    'skyline_mean_exact',
    'layer_mean_full',
    'layer_mean_full_exact',
    'layer_mean_full_asymptotic',
    'layer_mean_one',
    'layer_mean_one_asymptotic',

    # Categorical model
    'categorical_volume',
    'categorical_mean',
    'categorical_mean_two_level',
    'categorical_mean_weighted',
    'categorical_limit',
    'categorical_limit_uniform',
    'categorical_variance_limit',

    # Cycles and bounds
    'cycle_mean',
    'beta',
    'lower_bound',
    'lower_bound_value',
    'lower_bound_integral',
    'lower_bound_series',
    'lower_bound_limit',

    # Hypercube volumes
    'dominating_volume',
    'almost_full_volume',
    'skyline_integrand',
]
