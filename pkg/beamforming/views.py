"""Handlers behind the `run`, `sweep` and `dump-config` verbs."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import pandas as pd
from pydantic import ValidationError
from tqdm import tqdm

from sva_lab import settings

from .array_model import synthesize_snapshot
from .beamformer import angle_grid, beampattern
from .errors import MetricsError
from .forms import config_to_dict, dump_config_text, parse_config, validation_error
from .metrics import compute_metrics, detects_target, peak_loss_db, resolvability
from .models import MethodKind
from .spectral import padding_factor
from .utils import atomic_write_text, frame_to_csv, gnuplot_script, metrics_report_text, write_pattern_csv

logger = logging.getLogger(__name__)

METRICS_FILE = 'metrics.txt'
SUMMARY_FILE = 'summary.csv'
PLOT_FILE = 'plot.gp'


@dataclass
class RunResult:
    output_dir: Path
    files: list = field(default_factory=list)
    patterns: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)


@dataclass
class SweepResult:
    output_dir: Path
    summary: pd.DataFrame
    runs: list = field(default_factory=list)


def compute_patterns(config):
    """Beampatterns of the scenario snapshot for every configured method, keyed by slug."""
    geometry = config.scenario.geometry
    methods = config.method_list
    if any(m.is_sva for m in methods):
        padding_factor(config.dft_size, geometry.sensor_count)

    snapshot = synthesize_snapshot(config.scenario)
    angles = angle_grid(config.angle_step_deg)
    return {
        m.slug: beampattern(snapshot, geometry, m, angles, config.dft_size, config.denom_epsilon)
        for m in methods
    }


def _pair_window(config):
    declared = config.declared_angles
    if len(declared) >= 2:
        return 0.5 * abs(declared[0] - declared[1])
    return 1.0


def _peak_loss(reference, pattern, config):
    try:
        return peak_loss_db(reference, pattern, config.declared_angles[0], _pair_window(config))
    except MetricsError as exc:
        logger.warning("%s: %s", pattern.method, exc)
        return math.nan


def pattern_rows(config, patterns):
    declared = config.declared_angles
    reference = next((p for p in patterns.values() if p.method.kind is MethodKind.RECT), None)
    rows = []
    for slug, pattern in patterns.items():
        row = {'method': slug}
        row.update(compute_metrics(pattern, declared).as_dict())
        if len(declared) >= 2:
            row['resolved'] = resolvability(pattern, declared[0], declared[1])
        for target in config.target_angles:
            row[f'detected_{target:g}'] = detects_target(pattern, target)
        if reference is not None and declared:
            row['peak_loss_db'] = _peak_loss(reference, pattern, config)
        rows.append(row)
    return rows


def _report_entries(rows):
    for row in rows:
        slug = row['method']
        for name, value in row.items():
            if name != 'method':
                yield f"{slug}.{name}", value


def run(config, gnuplot=False):
    out = Path(config.output_dir)
    patterns = compute_patterns(config)
    result = RunResult(out, patterns=patterns, rows=pattern_rows(config, patterns))

    for slug, pattern in patterns.items():
        path = write_pattern_csv(pattern, out / f"{slug}.csv", config.emit_alpha_trace)
        result.files.append(path)
        logger.info("wrote %s", path)

    result.files.append(atomic_write_text(out / METRICS_FILE, metrics_report_text(_report_entries(result.rows))))

    if gnuplot:
        script = gnuplot_script([f"{slug}.csv" for slug in patterns], out.name or 'beampattern')
        result.files.append(atomic_write_text(out / PLOT_FILE, script))
    return result


def _point_config(config, spec, value):
    try:
        point = spec.apply(config, value)
    except ValidationError as exc:
        raise validation_error(exc) from exc
    data = config_to_dict(point)
    data['output_dir'] = str(Path(config.output_dir) / spec.label(value))
    return parse_config(data)


def sweep(config, spec, gnuplot=False):
    out = Path(config.output_dir)
    points = [(value, _point_config(config, spec, value)) for value in spec.values]

    def run_point(item):
        value, point = item
        return value, run(point, gnuplot)

    progress = dict(total=len(points), desc=f"sweep {spec.parameter}", disable=None)
    if settings.SWEEP_WORKERS > 1:
        with ThreadPoolExecutor(max_workers=settings.SWEEP_WORKERS) as pool:
            runs = list(tqdm(pool.map(run_point, points), **progress))
    else:
        runs = list(tqdm(map(run_point, points), **progress))

    records = []
    for value, result in runs:
        for row in result.rows:
            records.append({spec.parameter: value, **row})
    summary = pd.DataFrame(records)
    atomic_write_text(out / SUMMARY_FILE, frame_to_csv(summary))
    logger.info("wrote %s (%d rows)", out / SUMMARY_FILE, len(summary))
    return SweepResult(out, summary, [r for _, r in runs])


def dump_config(config, path=None):
    text = dump_config_text(config)
    if path is not None:
        atomic_write_text(path, text)
        logger.info("wrote %s", path)
    return text
