import enum
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from sva_lab import settings

from .errors import ConfigError


class FrozenModel(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')


class ArrayGeometry(FrozenModel):
    """Uniform linear array: M sensors spaced d1 = d / lambda0 apart, sensor 0 is the reference."""

    sensor_count: int = Field(ge=2)
    spacing_ratio: float = Field(default=0.5, gt=0)


class SourceSpec(FrozenModel):
    azimuth_deg: float = Field(ge=0.0, le=180.0)  # from the array axis
    power_db: float = 0.0
    phase_rad: float = 0.0

    @field_validator('power_db', 'phase_rad')
    @classmethod
    def finite(cls, value):
        if not math.isfinite(value):
            raise ValueError("must be finite")
        return value


class Scenario(FrozenModel):
    geometry: ArrayGeometry
    sources: list[SourceSpec] = Field(min_length=1)
    snr_db: float = math.inf
    seed: int = Field(default=0, ge=0, le=2**64 - 1)
    random_phases: bool = False

    @field_validator('snr_db')
    @classmethod
    def not_nan(cls, value):
        if math.isnan(value):
            raise ValueError("SNR cannot be NaN")
        return value

    @property
    def noiseless(self):
        return math.isinf(self.snr_db) and self.snr_db > 0


class MethodKind(enum.Enum):
    RECT = 'rect'
    HANNING = 'hanning'
    RAISED_COSINE = 'raised-cosine'
    SVA_JOINTLY = 'sva-joint'
    SVA_SEPARATELY = 'sva-separate'


@dataclass(frozen=True)
class Method:
    kind: MethodKind
    alpha: Optional[float] = None

    @classmethod
    def parse(cls, text):
        name, _, arg = text.strip().partition(':')
        try:
            kind = MethodKind(name)
        except ValueError:
            choices = ', '.join(k.value for k in MethodKind)
            raise ConfigError(f"unknown method {text!r} (choose from {choices})", field='methods')
        if kind is MethodKind.RAISED_COSINE:
            try:
                alpha = float(arg)
            except ValueError:
                raise ConfigError(f"{text!r} needs a numeric alpha, e.g. raised-cosine:0.25", field='methods')
            if not 0.0 <= alpha <= 0.5:
                raise ConfigError(f"alpha {alpha} outside [0, 1/2]", field='methods')
            return cls(kind, alpha)
        if arg:
            raise ConfigError(f"method {name!r} takes no argument", field='methods')
        return cls(kind)

    @property
    def is_sva(self):
        return self.kind in (MethodKind.SVA_JOINTLY, MethodKind.SVA_SEPARATELY)

    @property
    def slug(self):
        if self.kind is MethodKind.RAISED_COSINE:
            return f"raised-cosine-{self.alpha:g}"
        return self.kind.value

    def __str__(self):
        if self.kind is MethodKind.RAISED_COSINE:
            return f"raised-cosine:{self.alpha:g}"
        return self.kind.value


DEFAULT_METHODS = ['rect', 'hanning', 'sva-joint', 'sva-separate']


class RunConfig(FrozenModel):
    scenario: Scenario
    methods: list[str] = Field(default_factory=lambda: list(DEFAULT_METHODS), min_length=1)
    dft_size: int = Field(default=1024, gt=0)
    angle_step_deg: float = Field(default=settings.ANGLE_STEP_DEG, gt=0, le=180)
    output_dir: Path = settings.OUTPUT_DIR
    emit_alpha_trace: bool = True
    denom_epsilon: float = Field(default=settings.DENOM_EPSILON, gt=0)
    declared_angles: list[float] = Field(default_factory=list)
    target_angles: list[float] = Field(default_factory=list)

    @field_validator('methods')
    @classmethod
    def known_methods(cls, value):
        for text in value:
            Method.parse(text)
        return value

    @field_validator('declared_angles', 'target_angles')
    @classmethod
    def in_half_plane(cls, value):
        for angle in value:
            if not 0.0 <= angle <= 180.0:
                raise ValueError(f"angle {angle} outside [0, 180]")
        return value

    @property
    def method_list(self):
        return [Method.parse(text) for text in self.methods]


SWEEPABLE = ('sensor_count', 'snr_db', 'dft_size')


class SweepSpec(FrozenModel):
    parameter: Literal['sensor_count', 'snr_db', 'dft_size']
    values: list[float] = Field(min_length=1)

    @field_validator('values')
    @classmethod
    def whole_counts(cls, value, info):
        parameter = info.data.get('parameter')
        if parameter in ('sensor_count', 'dft_size'):
            for v in value:
                if not float(v).is_integer():
                    raise ValueError(f"{parameter} values must be whole numbers, got {v:g}")
        return value

    def apply(self, config, value):
        """Copy of ``config`` with the swept parameter set to ``value``."""
        data = config.model_dump()
        if self.parameter == 'sensor_count':
            data['scenario']['geometry']['sensor_count'] = int(value)
        elif self.parameter == 'snr_db':
            data['scenario']['snr_db'] = float(value)
        else:
            data['dft_size'] = int(value)
        return RunConfig.model_validate(data)

    def label(self, value):
        if self.parameter == 'snr_db':
            return f"snr_db={value:g}"
        return f"{self.parameter}={int(value)}"
