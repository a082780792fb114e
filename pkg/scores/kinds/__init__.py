# scores/kinds/__init__.py

from .modularity_score import ModularityScore
from .dual_weight_score import (
    DualWeightScore,
    dual_weight_closed_form,
    complete_component_value,
    partition_like_optimum,
)
from .common_neighbor_score import CommonNeighborScore
from .cubic_triangle_score import CubicTriangleScore

__all__ = [
    'ModularityScore',
    'DualWeightScore',
    'CommonNeighborScore',
    'CubicTriangleScore',
    'dual_weight_closed_form',
    'complete_component_value',
    'partition_like_optimum',
]
