import asyncio
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from typing import Any, Callable, Dict, Optional, Sequence, Union

import numpy as np
from scipy import stats

from config import MonteCarloConfig, SamplerConfig, StatisticId
from samplers import make_sampler
from utils import ValidationError, WorkLimitExceeded, require
from .base import CloudCurve, EmpiricalDistribution, EstimateResult, StatisticParams
from .statistics import REGISTRY, cumulative_counts


def run_trial(statistic_id: StatisticId, sampler_config: SamplerConfig, params: StatisticParams,
              config: MonteCarloConfig, trial: int) -> float:
    dataset = make_sampler(sampler_config).sample(stream=trial)
    return REGISTRY.get(statistic_id).compute(dataset, params, config)


def run_curve_trial(sampler_config: SamplerConfig, k: int, m_grid: np.ndarray, trial: int) -> np.ndarray:
    dataset = make_sampler(sampler_config).sample(stream=trial)
    return cumulative_counts(dataset, k, m_grid)


def binomial_reference(n: int, p: float) -> Callable[[int], float]:
    distribution = stats.binom(n, p)
    return lambda value: float(distribution.pmf(value))


class MonteCarloHarness:
    """
    Replicates a statistic over independent trials. Trial t samples from
    stream t of the master seed, and results are reduced in trial order, so the
    output does not depend on the number of workers.
    """

    def __init__(self, config: Optional[MonteCarloConfig] = None):
        self.config = config or MonteCarloConfig()
        self.logger = logging.getLogger(__name__)

    def _prepare(self, sampler_config: SamplerConfig, trials: int, seed: Optional[int]) -> SamplerConfig:
        require(trials >= 2, f"trials must be >= 2, got {trials}")
        if seed is not None:
            sampler_config = replace(sampler_config, seed=seed)
        # building the sampler validates the model parameters
        make_sampler(replace(sampler_config))
        return sampler_config

    def _check_budget(self, per_trial: int, trials: int, what: str):
        estimated = per_trial * trials
        if estimated > self.config.work_ceiling and not self.config.force:
            raise WorkLimitExceeded(what, estimated, self.config.work_ceiling)

    def _collect(self, fn: Callable, args: Sequence[Any], trials: int) -> np.ndarray:
        if self.config.workers <= 1:
            return np.array([fn(*args, trial) for trial in range(trials)])
        return np.array(asyncio.run(self._gather(fn, args, trials)))

    async def _gather(self, fn: Callable, args: Sequence[Any], trials: int):
        loop = asyncio.get_running_loop()
        try:
            with ProcessPoolExecutor(max_workers=self.config.workers) as pool:
                tasks = [loop.run_in_executor(pool, fn, *args, trial) for trial in range(trials)]
                return await asyncio.gather(*tasks)
        except Exception as e:
            self.logger.error(f"❌ Worker pool failed: {e}")
            raise

    def estimate(self, statistic: Union[str, StatisticId], sampler_config: SamplerConfig, trials: int,
                 seed: Optional[int] = None, params: Optional[StatisticParams] = None) -> EstimateResult:
        statistic_id = StatisticId(statistic)
        params = params or StatisticParams()
        sampler_config = self._prepare(sampler_config, trials, seed)
        handler = REGISTRY.get(statistic_id)
        handler.validate(sampler_config, params)
        self._check_budget(handler.cost(sampler_config, params), trials, f"estimate {statistic_id.value}")

        self.logger.info(
            f"🎲 {statistic_id.value} on {sampler_config.model.value} n={sampler_config.n} "
            f"d={sampler_config.d}: {trials} trials, {self.config.workers} worker(s)"
        )
        values = self._collect(run_trial, (statistic_id, sampler_config, params, self.config), trials)
        result_params: Dict[str, Any] = {
            "model": sampler_config.model.value, "n": sampler_config.n, "d": sampler_config.d, **params.to_dict()
        }
        result = EstimateResult.from_values(statistic_id, result_params, values, sampler_config.seed)
        self.logger.info(f"✅ mean={result.mean:.6g} stderr={result.stderr:.3g}")
        return result

    def cumulative_cloud_curve(self, sampler_config: SamplerConfig, k: int, m_grid: Sequence[int],
                               trials: int, seed: Optional[int] = None) -> CloudCurve:
        """Mean of sum_{j<=m} L(j) over trials for every m of the grid."""
        sampler_config = self._prepare(sampler_config, trials, seed)
        n = sampler_config.n
        grid = np.asarray(sorted(set(int(m) for m in m_grid)), dtype=np.int64)
        if grid.size == 0 or grid[0] < 0 or grid[-1] > n - 1:
            raise ValidationError(f"m grid must lie in [0, n-1] (n={n})")
        REGISTRY.get(StatisticId.CUMULATIVE_CLOUD).validate(sampler_config, StatisticParams(k=k, m=int(grid[0])))
        self._check_budget(n * n * sampler_config.d, trials, "cumulative cloud curve")

        matrix = self._collect(run_curve_trial, (sampler_config, k, grid), trials)
        means = matrix.mean(axis=0)
        stderrs = matrix.std(axis=0, ddof=1) / np.sqrt(trials)
        return CloudCurve(k=k, rows=[(int(m), float(mu), float(se)) for m, mu, se in zip(grid, means, stderrs)])

    def distribution_histogram(self, statistic: Union[str, StatisticId], sampler_config: SamplerConfig,
                               trials: int, seed: Optional[int] = None,
                               params: Optional[StatisticParams] = None) -> EmpiricalDistribution:
        statistic_id = StatisticId(statistic)
        params = params or StatisticParams()
        sampler_config = self._prepare(sampler_config, trials, seed)
        handler = REGISTRY.get(statistic_id)
        handler.validate(sampler_config, params)
        self._check_budget(handler.cost(sampler_config, params), trials, f"distribution {statistic_id.value}")

        values = self._collect(run_trial, (statistic_id, sampler_config, params, self.config), trials)
        counts = Counter(int(v) for v in values)
        frequencies = {value: count / trials for value, count in sorted(counts.items())}
        return EmpiricalDistribution(
            frequencies=frequencies,
            trials=trials,
            mean=float(np.mean(values)),
            variance=float(np.var(values, ddof=1)),
        )
