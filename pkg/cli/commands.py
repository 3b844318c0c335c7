import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from analytics import (
    beta,
    categorical_mean,
    cycle_mean,
    harmonic,
    layer_mean_full_exact,
    skyline_mean_exact,
)
from asymptotics import d0_boundaries, d1_boundaries, predict, sigma_m, threshold_d0, threshold_d1
from config import (
    DatasetMode,
    MonteCarloConfig,
    SamplerConfig,
    SamplerModel,
    StatisticId,
    ThresholdKind,
    parse_levels,
)
from dominance import Dataset, get_algorithm
from montecarlo import EstimateResult, MonteCarloHarness, StatisticParams
from samplers import make_sampler
from utils import ValidationError, parse_int_list, write_csv, write_json
from .tables import TableOptions, build_table


logger = logging.getLogger(__name__)


def _emit(payload: Any, out: Optional[str]) -> List[str]:
    """JSON to --out when given, otherwise to stdout."""
    if out:
        return [write_json(out, payload)]
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return []


def _out_path(args, default_name: str) -> str:
    return args.out or os.path.join(args.out_dir, default_name)


def _sampler_config(args) -> SamplerConfig:
    return SamplerConfig(
        model=SamplerModel(args.model),
        n=args.n,
        d=args.d,
        seed=args.seed,
        levels=parse_levels(args.levels),
    )


def cmd_sample(args) -> List[str]:
    """Draw one dataset and write it as CSV."""
    config = _sampler_config(args)
    dataset = make_sampler(config).sample()
    path = _out_path(args, f"sample-{config.model.value}-n{config.n}-d{config.d}-seed{config.seed}.csv")
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    dataset.to_csv(path)
    logger.info(f"📄 Wrote {dataset.n} points to {path}")
    return [path]


def cmd_skyline(args) -> List[str]:
    """k-dominant skylines of a CSV dataset, as JSON index lists per k."""
    dataset = Dataset.from_csv(args.input, DatasetMode(args.mode))
    ks = parse_int_list(args.k) or [dataset.d]
    algorithm = get_algorithm(args.algorithm)
    skylines = {}
    for k in ks:
        skylines[str(k)] = sorted(algorithm.compute(dataset, k))
        logger.info(f"k={k}: {len(skylines[str(k)])} skyline points ({algorithm.get_status_info()})")
    payload = {"n": dataset.n, "d": dataset.d, "algorithm": algorithm.name, "skylines": skylines}
    return _emit(payload, args.out)


def cmd_estimate(args) -> List[str]:
    """Monte Carlo estimates written as CSV rows (one per k or grid point)."""
    config = _sampler_config(args)
    harness = MonteCarloHarness(MonteCarloConfig(
        workers=args.workers, force=args.force, algorithm=args.algorithm,
    ))
    statistic = StatisticId(args.stat)
    ks = parse_int_list(args.k) or [None]
    rows = []

    for k in ks:
        if statistic == StatisticId.CUMULATIVE_CLOUD:
            if k is None:
                raise ValidationError("cumulative-cloud needs --k")
            grid = parse_int_list(args.m_grid) or list(range(config.n))
            curve = harness.cumulative_cloud_curve(config, k, grid, args.trials)
            for m, mean, stderr in curve.rows:
                result = EstimateResult(
                    statistic, {"model": config.model.value, "n": config.n, "d": config.d, "k": k, "m": m},
                    args.trials, mean, stderr, (mean - 1.96 * stderr, mean + 1.96 * stderr), config.seed,
                )
                rows.append(result.to_row())
            continue

        params = StatisticParams(k=k, j=args.j, length=args.length)
        result = harness.estimate(statistic, config, args.trials, params=params)
        rows.append(result.to_row())
        print(f"{statistic.value} k={k}: mean={result.mean:.6g} stderr={result.stderr:.3g} "
              f"ci95=({result.ci95[0]:.6g}, {result.ci95[1]:.6g})")

    path = _out_path(args, f"estimate-{statistic.value}-{config.model.value}-n{config.n}-d{config.d}.csv")
    return [write_csv(path, EstimateResult.CSV_HEADER, rows)]


def _exact_value(args):
    formula = args.formula
    if formula == "mu":
        return skyline_mean_exact(args.n, args.d)
    if formula == "harmonic":
        return harmonic(args.n, args.a)
    if formula == "layer_mean_full":
        return layer_mean_full_exact(args.n, args.d, args.j)
    if formula == "cycle_mean":
        return cycle_mean(args.n, args.d)
    if formula == "beta":
        return beta(args.d, args.k)
    if formula == "categorical_mean":
        return categorical_mean(args.n, args.k, parse_levels(args.levels))
    if formula == "sigma_m":
        return sigma_m(args.m, args.ell)
    raise ValidationError(f"unknown exact formula id {formula!r}")


EXACT_FORMULAS = ("mu", "harmonic", "layer_mean_full", "cycle_mean", "beta", "categorical_mean", "sigma_m")


def cmd_predict(args) -> List[str]:
    """Evaluate a predictor (or, with --exact, an exact rational formula)."""
    if args.exact:
        value = _exact_value(args)
        params = {key: getattr(args, key) for key in ("n", "d", "k", "j", "m", "a", "ell", "levels")
                  if getattr(args, key) is not None}
        payload: Dict[str, Any] = {"formula_id": args.formula, "params": params, **value.to_dict(args.precision)}
    else:
        report = predict(args.formula, args.n, args.d, k=args.k, j=args.j)
        payload = report.to_dict(args.precision)
    return _emit(payload, args.out)


def cmd_threshold(args) -> List[str]:
    """d0/d1 for one n, or the boundary sequences up to --imax."""
    kind = ThresholdKind(args.kind)
    if args.table:
        boundaries = d0_boundaries(args.imax) if kind == ThresholdKind.D0 else d1_boundaries(args.imax)
        payload = {"kind": kind.value, "imax": args.imax,
                   "boundaries": {str(i): str(a) for i, a in enumerate(boundaries, start=1)}}
    else:
        if args.n is None:
            raise ValidationError("threshold needs --n or --table")
        result = threshold_d0(args.n) if kind == ThresholdKind.D0 else threshold_d1(args.n)
        print(result.value)
        payload = result.to_dict()
        if not args.out:
            return []
    return _emit(payload, args.out)


def cmd_table(args) -> List[str]:
    """Regenerate a numeric table as CSV and print the comparison report."""
    options = TableOptions(
        seed=args.seed,
        trials=args.trials,
        with_mc=args.with_mc,
        imax=args.imax,
        n=args.n,
        mc_config=MonteCarloConfig(workers=args.workers, force=args.force, algorithm=args.algorithm),
    )
    table = build_table(args.id, options)
    path = args.out or os.path.join(args.out_dir, f"{table.table_id.value}.csv")
    write_csv(path, table.header, table.rows)
    for line in table.report:
        print(line)
    return [path]


