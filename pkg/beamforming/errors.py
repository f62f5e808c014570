"""Exceptions raised by the beamforming package and the exit codes they map to."""

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


class BeamformingError(Exception):
    exit_code = EXIT_CONFIG


class ConstraintViolation(BeamformingError, ValueError):
    """A parameter is outside its allowed range (alpha, angle, bin, sensor index)."""

    exit_code = EXIT_NUMERICAL


class SizeError(BeamformingError, ValueError):
    """Vector lengths or transform sizes do not fit together."""

    exit_code = EXIT_NUMERICAL


class ConfigurationError(BeamformingError, ValueError):
    """The DFT size is not an integer multiple of the sensor count."""

    exit_code = EXIT_NUMERICAL


class ConfigError(BeamformingError, ValueError):
    """The run configuration cannot be parsed or fails validation."""

    exit_code = EXIT_CONFIG

    def __init__(self, message, field=None):
        self.field = field
        if field:
            message = f"{field}: {message}"
        super().__init__(message)


class MetricsError(BeamformingError):
    exit_code = EXIT_NUMERICAL
