import argparse
import logging
import os
import sys
import time
from typing import List, Optional

from config import (
    DEFAULT_LOG_LEVEL_ENV,
    DEFAULT_SEED_ENV,
    DEFAULT_WORKERS_ENV,
    DatasetMode,
    FormulaId,
    RunConfig,
    SamplerModel,
    SkylineAlgorithmId,
    StatisticId,
    TableId,
    ThresholdKind,
    TOOL_VERSION,
)
from utils import WorkLimitExceeded, check_env_variables
from .commands import (
    EXACT_FORMULAS,
    cmd_estimate,
    cmd_predict,
    cmd_sample,
    cmd_skyline,
    cmd_table,
    cmd_threshold,
)
from .manifest import RunManifest


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_VALIDATION = 2
EXIT_WORK_LIMIT = 3


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=None,
                        help=f'Master seed (default: ${DEFAULT_SEED_ENV} or built-in)')
    common.add_argument('--precision', type=int, default=15,
                        help='Decimal digits when rendering exact values')
    common.add_argument('--out-dir', default='.', help='Directory for default output paths')
    common.add_argument('--force', action='store_true', help='Ignore the work ceiling')
    common.add_argument('--log-level', default=None,
                        help=f'Logging level (default: ${DEFAULT_LOG_LEVEL_ENV} or INFO)')
    return common


def _sampler_flags(parser: argparse.ArgumentParser):
    parser.add_argument('--model', choices=[m.value for m in SamplerModel], default=SamplerModel.HYPERCUBE.value)
    parser.add_argument('--n', type=int, required=True)
    parser.add_argument('--d', type=int, default=1)
    parser.add_argument('--levels', default=None, help='Comma list of categorical level counts, e.g. 2,3,2')


def _mc_flags(parser: argparse.ArgumentParser):
    parser.add_argument('--trials', type=int, default=100)
    parser.add_argument('--workers', type=int, default=None,
                        help=f'Worker processes (default: ${DEFAULT_WORKERS_ENV} or 1)')
    parser.add_argument('--algorithm', choices=[a.value for a in SkylineAlgorithmId],
                        default=SkylineAlgorithmId.THREE_PHASE.value)


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog='skyline-toolkit',
        description='k-dominant skylines: sampling, exact analytics, asymptotics and Monte Carlo',
    )
    parser.add_argument('--version', action='version', version=TOOL_VERSION)
    subparsers = parser.add_subparsers(dest='command', help='Command to run')

    sample = subparsers.add_parser('sample', parents=[common], help='Draw one dataset as CSV')
    _sampler_flags(sample)
    sample.add_argument('--out', default=None, help='CSV path')

    sky = subparsers.add_parser('skyline', parents=[common], help='k-dominant skylines of a CSV dataset')
    sky.add_argument('--in', dest='input', required=True, help='CSV dataset')
    sky.add_argument('--k', default=None, help='Comma list of k values (default: d)')
    sky.add_argument('--mode', choices=[m.value for m in DatasetMode], default=DatasetMode.CONTINUOUS.value)
    sky.add_argument('--algorithm', choices=[a.value for a in SkylineAlgorithmId],
                     default=SkylineAlgorithmId.EXHAUSTIVE.value)
    sky.add_argument('--out', default=None, help='JSON path (default: stdout)')

    est = subparsers.add_parser('estimate', parents=[common], help='Monte Carlo estimate of a statistic')
    est.add_argument('--stat', choices=[s.value for s in StatisticId], required=True)
    _sampler_flags(est)
    _mc_flags(est)
    est.add_argument('--k', default=None, help='Comma list or a..b range of k values')
    est.add_argument('--j', type=int, default=None, help='Cloud cell index')
    est.add_argument('--length', type=int, default=None, help='Cycle length')
    est.add_argument('--m-grid', default=None, help='Cumulative cloud grid, e.g. 0..99')
    est.add_argument('--out', default=None, help='CSV path')

    pred = subparsers.add_parser('predict', parents=[common], help='Evaluate a predictor or exact formula')
    pred.add_argument('--formula', required=True,
                      help=f'One of {[f.value for f in FormulaId]}, or with --exact one of {list(EXACT_FORMULAS)}')
    pred.add_argument('--exact', action='store_true', help='Evaluate an exact rational formula')
    pred.add_argument('--n', type=int, default=None)
    pred.add_argument('--d', type=int, default=None)
    pred.add_argument('--k', type=int, default=None)
    pred.add_argument('--j', type=int, default=None)
    pred.add_argument('--m', type=int, default=None)
    pred.add_argument('--a', type=int, default=1, help='Harmonic order')
    pred.add_argument('--ell', type=int, default=None)
    pred.add_argument('--levels', default=None)
    pred.add_argument('--out', default=None, help='JSON path (default: stdout)')

    thr = subparsers.add_parser('threshold', parents=[common], help='Critical dimensions d0 and d1')
    thr.add_argument('--kind', choices=[t.value for t in ThresholdKind], required=True)
    thr.add_argument('--n', type=int, default=None)
    thr.add_argument('--table', action='store_true', help='Dump the boundary sequence a_1..a_imax')
    thr.add_argument('--imax', type=int, default=12)
    thr.add_argument('--out', default=None, help='JSON path (default: stdout)')

    tab = subparsers.add_parser('table', parents=[common], help='Regenerate a numeric table as CSV')
    tab.add_argument('--id', choices=[t.value for t in TableId], required=True)
    tab.add_argument('--with-mc', action='store_true', help='Add Monte Carlo columns')
    tab.add_argument('--imax', type=int, default=12)
    tab.add_argument('--n', type=int, default=None, help='Override n for the figure tables')
    _mc_flags(tab)
    tab.add_argument('--out', default=None, help='CSV path')

    rerun = subparsers.add_parser('rerun', parents=[common], help='Repeat the run recorded in a manifest')
    rerun.add_argument('--manifest', required=True)

    return parser


def _replay_argv(argv: List[str], seed: int) -> List[str]:
    """argv with the resolved seed made explicit."""
    replay = list(argv)
    if '--seed' in replay:
        position = replay.index('--seed')
        replay[position + 1] = str(seed)
    else:
        replay += ['--seed', str(seed)]
    return replay


def cmd_rerun(args) -> List[str]:
    manifest = RunManifest.load(args.manifest)
    logger.info(f"🔁 Replaying {manifest.subcommand} from {args.manifest} (tool {manifest.tool_version})")
    if manifest.tool_version != TOOL_VERSION:
        logger.warning(f"⚠️ Manifest written by tool {manifest.tool_version}, running {TOOL_VERSION}")
    code = main(manifest.argv)
    if code != EXIT_OK:
        raise RuntimeError(f"replayed run exited with code {code}")
    return []


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_FAILURE

    command_map = {
        'sample': cmd_sample,
        'skyline': cmd_skyline,
        'estimate': cmd_estimate,
        'predict': cmd_predict,
        'threshold': cmd_threshold,
        'table': cmd_table,
        'rerun': cmd_rerun,
    }

    try:
        check_env_variables([DEFAULT_SEED_ENV, DEFAULT_WORKERS_ENV])
        run_config = RunConfig(
            out_dir=args.out_dir, seed=args.seed, precision=args.precision,
            force=args.force, log_level=args.log_level,
        )
        logging.getLogger().setLevel(run_config.log_level.upper())
        args.seed = run_config.seed
        if run_config.seed_from_env:
            logger.info(f"🎲 Seed {args.seed} taken from ${DEFAULT_SEED_ENV}")

        started = time.perf_counter()
        outputs = command_map[args.command](args) or []
        duration = time.perf_counter() - started

        if outputs:
            flags = {key: value for key, value in vars(args).items() if key != 'command'}
            manifest = RunManifest(
                subcommand=args.command,
                argv=_replay_argv(argv, args.seed),
                flags=flags,
                seed=args.seed,
                outputs=[os.path.abspath(path) for path in outputs],
                duration_seconds=duration,
            )
            manifest.write()
        return EXIT_OK

    except WorkLimitExceeded as e:
        logger.error(f"⛔ {e} (pass --force to run anyway)")
        return EXIT_WORK_LIMIT
    except ValueError as e:
        logger.error(f"❌ Invalid input: {e}")
        return EXIT_VALIDATION
    except KeyboardInterrupt:
        logger.warning("Interrupted")
        return EXIT_FAILURE
    except Exception as e:
        logger.error(f"❌ {args.command} failed: {e}")
        return EXIT_FAILURE
