#!/usr/bin/env python
"""Command-line utility for running SVA beamforming experiments."""
import sys


def main():
    """Run experiment commands."""

    try:
        from sva_lab.commands import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import the experiment dependencies. Are numpy, scipy, "
            "pandas and pydantic installed and available on your PYTHONPATH? "
            "Did you forget to activate a virtual environment?"
        ) from exc
    sys.exit(execute_from_command_line(sys.argv[1:]))


if __name__ == '__main__':
    main()
