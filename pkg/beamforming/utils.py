import math
import os
import tempfile
from pathlib import Path

import pandas as pd

from sva_lab import settings


def atomic_write_text(path, text):
    """Write ``text`` to a temp file next to ``path`` and rename it into place."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def pattern_frame(pattern, emit_alpha=False):
    columns = {'angle_deg': pattern.angles_deg, 'power_db': pattern.power_db}
    if emit_alpha and pattern.alpha_trace is not None:
        columns['alpha'] = pattern.alpha_trace
    return pd.DataFrame(columns)


def frame_to_csv(frame):
    return frame.to_csv(index=False, float_format=settings.CSV_FLOAT_FORMAT, lineterminator='\n')


def write_pattern_csv(pattern, path, emit_alpha=False):
    return atomic_write_text(path, frame_to_csv(pattern_frame(pattern, emit_alpha)))


def format_value(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        if math.isnan(value):
            return 'nan'
        return settings.CSV_FLOAT_FORMAT % value
    return str(value)


def metrics_report_text(entries):
    """One ``name=value`` line per entry."""
    return ''.join(f"{name}={format_value(value)}\n" for name, value in entries)


def gnuplot_script(csv_names, title):
    plots = ', \\\n     '.join(
        f"'{name}' using 1:2 with lines title '{Path(name).stem}'" for name in csv_names
    )
    return (
        "set datafile separator ','\n"
        "set key autotitle columnhead\n"
        f"set title '{title}'\n"
        "set xlabel 'azimuth (deg)'\n"
        "set ylabel 'power (dB)'\n"
        "set xrange [0:180]\n"
        "set yrange [-100:5]\n"
        "set grid\n"
        f"plot {plots}\n"
    )
