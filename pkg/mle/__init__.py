# mle/__init__.py

"""
MLE Module
Fuzzy covers, the multilinear-extension objective and its derivatives.
"""

from .cover import (
    MembershipDistribution,
    FuzzyCover,
    is_fuzzy_clustering,
    partition_to_cover,
    uniform_cover,
    pairs_cover,
    cover_from_lists,
)
from .objective import (
    mle_point,
    mle_derivative,
    big_f,
    big_f_quadratic,
    conditional_score,
    derivative_iA,
    average_derivative,
    node_share,
    objective_without,
)
from .saturation import saturate_pair, saturate

__all__ = [
    'MembershipDistribution',
    'FuzzyCover',
    'is_fuzzy_clustering',
    'partition_to_cover',
    'uniform_cover',
    'pairs_cover',
    'cover_from_lists',
    'mle_point',
    'mle_derivative',
    'big_f',
    'big_f_quadratic',
    'conditional_score',
    'derivative_iA',
    'average_derivative',
    'node_share',
    'objective_without',
    'saturate_pair',
    'saturate',
]
