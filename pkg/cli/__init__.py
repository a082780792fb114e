# cli/__init__.py

"""
CLI Module
Batch runner over the search, overlap and generator packages.
"""

from .app import main, build_parser, cmd_cluster, cmd_merge, cmd_overlap, cmd_gen, cmd_oracle
from .run_config import RunConfig, GenConfig, layered_config

__all__ = [
    'main',
    'build_parser',
    'cmd_cluster',
    'cmd_merge',
    'cmd_overlap',
    'cmd_gen',
    'cmd_oracle',
    'RunConfig',
    'GenConfig',
    'layered_config',
]
