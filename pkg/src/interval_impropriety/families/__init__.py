"""
Generators for the graph families which are colored, products of graphs,
and exhaustive enumerators of small families.
"""

from typing import Optional, Tuple

from interval_impropriety.graph import Graph

from ._classic import (
    alternating_multipartite,
    caterpillar,
    complete,
    complete_multipartite,
    cycle,
    path,
    random_tree,
    spider,
    star,
)
from ._outerplanar import (
    enumerate_maximal_outerplanar,
    polygon_graph,
    random_maximal_outerplanar,
)
from ._products import corona, strong_product
from ._recipes import (
    CaterpillarLabels,
    CoronaLayout,
    FamilyRecipe,
    MultipartiteLabels,
    PolygonTriangulation,
    SpiderLabels,
    Trace,
    TriangulationTrace,
    TwoPathSequence,
    TwoTreeTrace,
    recipe_to_json,
    trace_to_json,
)
from ._registry import GENERATORS
from ._triangulations import (
    iterated_triangulation,
    iterated_triangulation_trace,
    replay_triangulation,
)
from ._two_trees import (
    enumerate_two_trees,
    example_two_path,
    fan,
    make_two_path,
    random_two_path,
    random_two_tree,
    recover_two_tree_trace,
    remaining_edges,
    replay_two_tree,
    square_of_path,
    two_path_graph,
)
from .exceptions import InvalidRecipe


def generate(recipe: FamilyRecipe) -> Tuple[Graph, Optional[Trace]]:
    """
    Generate the graph a recipe names.

    Args:
        recipe: The family and its parameters.

    Returns:
        The graph and the trace for its kind: ``MultipartiteLabels``,
        ``TwoPathSequence``, ``TwoTreeTrace``, ``TriangulationTrace``,
        ``CoronaLayout``, ``PolygonTriangulation``, ``SpiderLabels``,
        ``CaterpillarLabels`` or ``None``.

    Raises:
        InvalidRecipe: The parameters are not valid for the kind.
    """
    try:
        generator = GENERATORS[recipe.kind]
    except KeyError as exc:
        raise InvalidRecipe(
            kind=str(recipe.kind),
            message='there is no generator for this kind.',
        ) from exc
    return generator(recipe)


__all__ = [
    'CaterpillarLabels',
    'CoronaLayout',
    'FamilyRecipe',
    'MultipartiteLabels',
    'PolygonTriangulation',
    'SpiderLabels',
    'Trace',
    'TriangulationTrace',
    'TwoPathSequence',
    'TwoTreeTrace',
    'alternating_multipartite',
    'caterpillar',
    'complete',
    'complete_multipartite',
    'corona',
    'cycle',
    'enumerate_maximal_outerplanar',
    'enumerate_two_trees',
    'example_two_path',
    'fan',
    'generate',
    'iterated_triangulation',
    'iterated_triangulation_trace',
    'make_two_path',
    'path',
    'polygon_graph',
    'random_maximal_outerplanar',
    'random_tree',
    'random_two_path',
    'random_two_tree',
    'recipe_to_json',
    'recover_two_tree_trace',
    'remaining_edges',
    'replay_triangulation',
    'replay_two_tree',
    'spider',
    'square_of_path',
    'star',
    'strong_product',
    'trace_to_json',
    'two_path_graph',
]
