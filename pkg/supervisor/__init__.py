# supervisor/__init__.py

"""
Supervisor Module
Multi-run orchestration: the weighted family of overlapping modules, the
union closure of its members and the two-stage small-then-large search.
"""

from .family import FamilyEntry, BestRun, WeightedFamily
from .dispatcher import Dispatcher, RunResult, multi_run
from .omega import omega, union_closure
from .two_stage import OverlapSupervisor, perturb_cover, large_module_init, two_stage

__all__ = [
    'FamilyEntry',
    'BestRun',
    'WeightedFamily',
    'Dispatcher',
    'RunResult',
    'multi_run',
    'omega',
    'union_closure',
    'OverlapSupervisor',
    'perturb_cover',
    'large_module_init',
    'two_stage',
]
