"""
Command routing for manage.py.

    python manage.py run --config scenarios/close_pair_weak_target.yaml --gnuplot
    python manage.py sweep --config close_pair_32 --param sensor_count --values 32,64
    python manage.py dump-config --config close_pair_weak_target --seed 7
"""

import argparse
import logging
import sys
from pathlib import Path

from beamforming import views
from beamforming.errors import EXIT_OK, BeamformingError, ConfigError
from beamforming.forms import load_config, parse_methods, parse_sweep, with_overrides

from . import log, settings

logger = logging.getLogger(__name__)

DEFAULT_SCENARIO = 'close_pair_weak_target'


def resolve_config_path(name):
    """A config path, or the name of a bundled scenario under SCENARIO_DIR."""
    path = Path(name)
    if path.exists():
        return path
    bundled = settings.SCENARIO_DIR / (name if name.endswith('.yaml') else f"{name}.yaml")
    if bundled.exists():
        return bundled
    raise ConfigError(f"no config file or bundled scenario named {name!r}", field='config')


def _load(args):
    config = load_config(resolve_config_path(args.config or DEFAULT_SCENARIO))
    return with_overrides(
        config,
        seed=args.seed,
        methods=parse_methods(getattr(args, 'methods', None)),
        output_dir=getattr(args, 'out', None),
    )


def run_command(args):
    result = views.run(_load(args), gnuplot=args.gnuplot)
    logger.info("run finished: %d files in %s", len(result.files), result.output_dir)


def sweep_command(args):
    spec = parse_sweep(args.param, [v for v in args.values.split(',') if v.strip()])
    result = views.sweep(_load(args), spec, gnuplot=args.gnuplot)
    logger.info("sweep finished: %d points in %s", len(result.runs), result.output_dir)


def dump_config_command(args):
    text = views.dump_config(_load(args), args.out)
    if args.out is None:
        sys.stdout.write(text)


def _common(parser, out_help):
    parser.add_argument('--config', help="YAML config file or bundled scenario name")
    parser.add_argument('--seed', type=int, help="Override the scenario RNG seed")
    parser.add_argument('--out', help=out_help)


def build_parser():
    parser = argparse.ArgumentParser(prog='manage.py', description="SVA beamforming experiments.")
    parser.add_argument('--log-level', help="Override SVA_LOG_LEVEL")
    sub = parser.add_subparsers(dest='verb', required=True)

    run = sub.add_parser('run', help="Compute beampatterns and metrics for one config")
    _common(run, "Output directory")
    run.add_argument('--methods', help="Comma-separated list, e.g. rect,hanning,sva-joint")
    run.add_argument('--gnuplot', action='store_true', help="Also write plot.gp")
    run.set_defaults(handler=run_command)

    sweep = sub.add_parser('sweep', help="Repeat a run over values of one parameter")
    _common(sweep, "Output directory")
    sweep.add_argument('--methods', help="Comma-separated list of methods")
    sweep.add_argument('--param', required=True, help="sensor_count, snr_db or dft_size")
    sweep.add_argument('--values', required=True, help="Comma-separated values")
    sweep.add_argument('--gnuplot', action='store_true', help="Also write plot.gp per point")
    sweep.set_defaults(handler=sweep_command)

    dump = sub.add_parser('dump-config', help="Print the effective config as YAML")
    _common(dump, "Write to this file instead of stdout")
    dump.add_argument('--methods', help="Comma-separated list of methods")
    dump.set_defaults(handler=dump_config_command)
    return parser


def execute_from_command_line(argv=None):
    args = build_parser().parse_args(argv)
    log.configure(args.log_level)
    try:
        args.handler(args)
    except BeamformingError as exc:
        logger.error("%s", exc)
        return exc.exit_code
    return EXIT_OK
