"""Loading, validating and writing run configurations (YAML)."""

import logging
from pathlib import Path

import yaml
from pydantic import ValidationError

from .errors import ConfigError
from .models import SWEEPABLE, Method, RunConfig, SweepSpec

logger = logging.getLogger(__name__)


def _field_path(loc):
    return '.'.join(str(part) for part in loc)


def validation_error(exc):
    """First pydantic error as a ConfigError naming the offending field."""
    first = exc.errors()[0]
    return ConfigError(first['msg'], field=_field_path(first['loc']) or None)


def parse_config(data):
    if not isinstance(data, dict):
        raise ConfigError("config must be a mapping at the top level")
    try:
        return RunConfig.model_validate(data)
    except ValidationError as exc:
        raise validation_error(exc) from exc


def load_config(path):
    path = Path(path)
    try:
        with path.open('r', encoding='utf-8') as f:
            data = yaml.safe_load(f)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"{path} is not valid YAML: {exc}") from exc
    logger.debug("loaded config %s", path)
    return parse_config(data)


def config_to_dict(config):
    data = config.model_dump()
    data['output_dir'] = str(config.output_dir)
    return data


def dump_config_text(config):
    return yaml.safe_dump(config_to_dict(config), sort_keys=False)


def with_overrides(config, seed=None, methods=None, output_dir=None):
    """Copy of ``config`` with the command-line overrides applied and re-validated."""
    data = config_to_dict(config)
    if seed is not None:
        data['scenario']['seed'] = seed
    if methods:
        data['methods'] = [str(Method.parse(m)) for m in methods]
    if output_dir is not None:
        data['output_dir'] = str(output_dir)
    return parse_config(data)


def parse_methods(text):
    if not text:
        return None
    return [m.strip() for m in text.split(',') if m.strip()]


def parse_sweep(parameter, values):
    if parameter not in SWEEPABLE:
        raise ConfigError(f"cannot sweep {parameter!r} (choose from {', '.join(SWEEPABLE)})", field='param')
    try:
        numbers = [float(v) for v in values]
    except ValueError as exc:
        raise ConfigError(f"sweep values must be numbers: {exc}", field='values') from exc
    try:
        return SweepSpec(parameter=parameter, values=numbers)
    except ValidationError as exc:
        raise validation_error(exc) from exc
