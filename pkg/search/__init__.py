# search/__init__.py

"""
Search Module
GreedyMerging, GreedyClustering with its threshold initialization, and the
brute-force oracle used to check them.
"""

from .trace import TraceStep, SearchTrace
from .initialization import CandidateFamily, init_threshold, shifted_weights
from .greedy_merging import greedy_merging
from .greedy_clustering import GreedyClustering, greedy_clustering
from .oracle import brute_force_optimum, brute_force_argmax, brute_force_worst, is_local_optimum

__all__ = [
    'TraceStep',
    'SearchTrace',
    'CandidateFamily',
    'init_threshold',
    'shifted_weights',
    'greedy_merging',
    'GreedyClustering',
    'greedy_clustering',
    'brute_force_optimum',
    'brute_force_argmax',
    'brute_force_worst',
    'is_local_optimum',
]
