"""
Settings for the sva_lab project.

Values are read from the environment (or a ``.env`` file next to
``manage.py``) through python-decouple, so a batch run can be re-pointed
without touching the scenario files.
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

LOG_LEVEL = config('SVA_LOG_LEVEL', default='INFO')

# Where `run` and `sweep` write when neither the config nor --out says otherwise
OUTPUT_DIR = Path(config('SVA_OUTPUT_DIR', default='results'))

SCENARIO_DIR = Path(config('SVA_SCENARIO_DIR', default=str(BASE_DIR / 'scenarios')))

# Sweep points run in a thread pool when this is above 1
SWEEP_WORKERS = config('SVA_SWEEP_WORKERS', default=1, cast=int)

DENOM_EPSILON = config('SVA_DENOM_EPSILON', default=1e-12, cast=float)

ANGLE_STEP_DEG = config('SVA_ANGLE_STEP_DEG', default=0.1, cast=float)

CSV_FLOAT_FORMAT = '%.6f'
