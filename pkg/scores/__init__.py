# scores/__init__.py

"""
Scores Module
Cluster-score set functions in Moebius form and the registry used to build
them from a graph by name.
"""

from network.partition import Partition

from .cluster_score import ClusterScore, equalize_singletons
from .kinds import (
    ModularityScore,
    DualWeightScore,
    CommonNeighborScore,
    CubicTriangleScore,
    dual_weight_closed_form,
    complete_component_value,
    partition_like_optimum,
)
from .mobius import (
    mobius_inversion,
    zeta_transform,
    partition_mobius,
    score_to_set_function,
    additive_partition_function,
    modular_elements,
)

__all__ = [
    'ClusterScore',
    'Partition',
    'equalize_singletons',
    'ModularityScore',
    'DualWeightScore',
    'CommonNeighborScore',
    'CubicTriangleScore',
    'modularity_score',
    'dual_weight_score',
    'common_neighbor_score',
    'cubic_triangle_score',
    'dual_weight_closed_form',
    'complete_component_value',
    'partition_like_optimum',
    'mobius_inversion',
    'zeta_transform',
    'partition_mobius',
    'score_to_set_function',
    'additive_partition_function',
    'modular_elements',
    'build_score',
]

# Score registry for lookup by CLI name
SCORE_REGISTRY = {
    'modularity': ModularityScore,
    'dual-weight': DualWeightScore,
    'common-neighbor': CommonNeighborScore,
    'cubic-triangle': CubicTriangleScore,
}

# Score categories
SCORE_CATEGORIES = {
    'quadratic': [
        'modularity',
        'dual-weight',
        'common-neighbor',
    ],
    'cubic': [
        'cubic-triangle',
    ],
    'weighted_graphs': [
        'modularity',
        'dual-weight',
    ],
}


def get_score_by_name(score_name):
    """Get score class by name."""
    return SCORE_REGISTRY.get(score_name)


def get_scores_by_category(category):
    """Get all score classes in a category."""
    names = SCORE_CATEGORIES.get(category, [])
    return [SCORE_REGISTRY[name] for name in names if name in SCORE_REGISTRY]


def get_all_scores():
    """Get all available score classes."""
    return list(SCORE_REGISTRY.values())


def get_score_info():
    """Get information about all scores."""
    info = {}
    for name, score_class in SCORE_REGISTRY.items():
        info[name] = {
            'class': score_class,
            'id': score_class.id,
            'description': score_class.description,
            'requires_simple': score_class.requires_simple,
            'categories': [cat for cat, names in SCORE_CATEGORIES.items() if name in names],
        }
    return info


def build_score(score_name, graph, **params):
    """Instantiate the named score kind and build it on the graph."""
    score_class = get_score_by_name(score_name)
    if score_class is None:
        raise ValueError(f"unknown score '{score_name}'; choose from {sorted(SCORE_REGISTRY)}")
    return score_class(**params).build(graph)


def modularity_score(graph):
    return ModularityScore().build(graph)


def dual_weight_score(graph):
    return DualWeightScore().build(graph)


def common_neighbor_score(graph):
    return CommonNeighborScore().build(graph)


def cubic_triangle_score(graph, beta):
    return CubicTriangleScore(beta=beta).build(graph)
