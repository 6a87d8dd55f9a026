"""
Colorers for graph families, each verified against the impropriety it
guarantees.
"""

from ._checks import ConstructionStats, certified
from ._corona import color_corona, default_strategy
from ._forest import color_forest
from ._multipartite import (
    BlockFamily,
    BlockPlan,
    ShiftBlock,
    block_shift,
    color_multipartite_stst,
    pair_block_indices,
    sequential_block,
)
from ._outerplanar import color_outerplanar
from ._triangulations import color_iterated_triangulation
from ._two_trees import color_square_of_path, color_two_path, color_two_tree

__all__ = [
    'BlockFamily',
    'BlockPlan',
    'ConstructionStats',
    'ShiftBlock',
    'block_shift',
    'certified',
    'color_corona',
    'color_forest',
    'color_iterated_triangulation',
    'color_multipartite_stst',
    'color_outerplanar',
    'color_square_of_path',
    'color_two_path',
    'color_two_tree',
    'default_strategy',
    'pair_block_indices',
    'sequential_block',
]
