import numpy as np
import pytest

from beamforming.forms import load_config, with_overrides
from sva_lab import settings


@pytest.fixture
def rng():
    return np.random.default_rng(20240501)


@pytest.fixture
def scenario_config(tmp_path):
    """Loader for bundled scenarios, redirected to write under tmp_path."""

    def load(name, **overrides):
        config = load_config(settings.SCENARIO_DIR / f"{name}.yaml")
        overrides.setdefault('output_dir', tmp_path / name)
        return with_overrides(config, **overrides)

    return load


def random_complex(rng, size):
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)
