import os
from typing import Optional, Sequence, Tuple
from dataclasses import dataclass, field
from enum import Enum


DEFAULT_SEED_ENV = "SKYLINE_SEED"
DEFAULT_WORKERS_ENV = "SKYLINE_WORKERS"
DEFAULT_LOG_LEVEL_ENV = "SKYLINE_LOG_LEVEL"

TOOL_VERSION = "1.0.0"


class SamplerModel(Enum):
    """Random point models"""
    HYPERCUBE = "hypercube"            # i.i.d. uniform on (0,1)^d
    SIMPLEX = "simplex"                # uniform on the negative-orthant simplex
    CATEGORICAL = "categorical"        # product grid {1..u_1} x ... x {1..u_d}
    LINE_A = "line-A"                  # (-t, -2t, 3t, 4t), t uniform on [1,2]


class DatasetMode(Enum):
    """Coordinate domain of a dataset"""
    CONTINUOUS = "continuous"
    CATEGORICAL = "categorical"


class SkylineAlgorithmId(Enum):
    """Skyline algorithm selection"""
    EXHAUSTIVE = "exhaustive"
    THREE_PHASE = "three-phase"


class StatisticId(Enum):
    """Per-trial statistics understood by the Monte Carlo harness"""
    SKYLINE_COUNT = "skyline-count"
    K_DOMINANT_COUNT = "k-dominant-count"
    CLOUD_CELL = "cloud-cell"
    CUMULATIVE_CLOUD = "cumulative-cloud"
    CYCLE_COUNT = "cycle-count"


class FormulaId(Enum):
    """Asymptotic predictors exposed through predict()"""
    PHI_D = "phi_d"
    G_D = "g_d"
    PHI_MINUS_G = "phi_minus_g"
    CRITICAL_ESTIMATE = "critical_estimate"
    M_D1 = "m_d1"
    M_DK_UPPER = "m_dk_upper"
    SIMPLEX_SKYLINE = "simplex_skyline"
    CLOUD_COEFF = "cloud_coeff"
    CYCLE_MEAN_ASYM = "cycle_mean_asym"
    F_D_LEADING = "f_d_leading"


class ThresholdKind(Enum):
    """Dimension thresholds"""
    D0 = "d0"
    D1 = "d1"


class TableId(Enum):
    """Regenerable numeric tables"""
    MU_10E4 = "mu-10e4"
    MU_10E5 = "mu-10e5"
    APPROX_10E4 = "approx-10e4"
    APPROX_10E5 = "approx-10e5"
    D0_BOUNDARIES = "d0-boundaries"
    D1_BOUNDARIES = "d1-boundaries"
    CLOUD_CURVES = "fig2-clouds"
    LOWER_BOUND_SWEEP = "fig4-lowerbound"


def default_seed() -> int:
    return int(os.environ.get(DEFAULT_SEED_ENV, "20240101"))


def default_workers() -> int:
    return int(os.environ.get(DEFAULT_WORKERS_ENV, "1"))


@dataclass
class PrecisionConfig:
    internal_digits: Optional[int] = 50     # mpmath working precision
    render_digits: Optional[int] = 15       # decimal rendering of exact values
    guard_digits: Optional[int] = 20        # extra digits for threshold boundaries


@dataclass
class QuadratureConfig:
    abs_tol: Optional[float] = 1e-12
    rel_tol: Optional[float] = 1e-10
    limit: Optional[int] = 200
    series_switch: Optional[float] = 10.0   # n*x above which the lower-bound series is tried


@dataclass
class CycleConfig:
    work_limit: Optional[int] = 10**9       # tuple checks allowed per dataset


@dataclass
class CategoricalConfig:
    max_grid_size: Optional[int] = 10**6    # cap on u for the exact grid sum
    weight_tolerance: Optional[float] = 1e-12


@dataclass
class SamplerConfig:
    model: SamplerModel = SamplerModel.HYPERCUBE
    n: int = 0
    d: int = 1
    seed: Optional[int] = None
    levels: Optional[Tuple[int, ...]] = None
    support: Optional[Tuple[Tuple[int, ...], ...]] = None
    weights: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        if isinstance(self.model, str):
            self.model = SamplerModel(self.model)

        if self.seed is None:
            self.seed = default_seed()

        if self.levels is not None:
            self.levels = tuple(int(u) for u in self.levels)

        if self.support is not None:
            self.support = tuple(tuple(int(c) for c in point) for point in self.support)

        if self.weights is not None:
            self.weights = tuple(float(w) for w in self.weights)

        if self.model == SamplerModel.LINE_A:
            self.d = 4
        elif self.model == SamplerModel.CATEGORICAL:
            if self.support is not None:
                self.d = len(self.support[0])
            elif self.levels is not None:
                self.d = len(self.levels)


@dataclass
class MonteCarloConfig:
    workers: Optional[int] = None
    work_ceiling: Optional[int] = 10**11    # n^2 * d * trials comparisons
    force: Optional[bool] = False
    algorithm: SkylineAlgorithmId = SkylineAlgorithmId.THREE_PHASE
    cycle_config: Optional[CycleConfig] = None
    precision: Optional[PrecisionConfig] = None

    def __post_init__(self):
        if self.workers is None:
            self.workers = default_workers()

        if isinstance(self.algorithm, str):
            self.algorithm = SkylineAlgorithmId(self.algorithm)

        if self.cycle_config is None:
            self.cycle_config = CycleConfig()

        if self.precision is None:
            self.precision = PrecisionConfig()


@dataclass
class RunConfig:
    out_dir: Optional[str] = "."
    seed: Optional[int] = None
    precision: Optional[int] = 15
    force: Optional[bool] = False
    log_level: Optional[str] = None
    seed_from_env: bool = field(default=False)

    def __post_init__(self):
        if self.seed is None:
            self.seed = default_seed()
            self.seed_from_env = DEFAULT_SEED_ENV in os.environ

        if self.log_level is None:
            self.log_level = os.environ.get(DEFAULT_LOG_LEVEL_ENV, "INFO")


def parse_levels(text: Optional[str]) -> Optional[Sequence[int]]:
    """Parse a comma list such as '2,3,2'"""
    if text is None or text == "":
        return None
    return tuple(int(part) for part in text.split(","))
