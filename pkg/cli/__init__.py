"""
CLI Package

Command-line front end: subcommands for sampling, skylines, estimation,
prediction, thresholds and table regeneration, each output paired with a
run manifest.
"""

from .main import build_parser, main
from .manifest import RunManifest
from .tables import Table, TableOptions, build_table

__all__ = [
    'main',
    'build_parser',
    'RunManifest',
    'Table',
    'TableOptions',
    'build_table',
]
