import logging

from rich.console import Console
from rich.logging import RichHandler

from . import settings


def configure(level=None):
    """Route all package loggers through a rich handler on stderr."""
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format='%(message)s',
        datefmt='[%X]',
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )
