"""
Colorings of iterated triangulations with three colors.
"""

import math
from typing import Any, Dict, Mapping

from interval_impropriety.coloring import EdgeColoring, make_coloring
from interval_impropriety.families import (
    TriangulationTrace,
    replay_triangulation,
)
from interval_impropriety.graph import Graph, max_degree

from ._checks import certified
from ._partial import Pair, pair
from .exceptions import PreconditionFailed


def _triangulation_graph(arguments: Mapping[str, Any]) -> Graph:
    return replay_triangulation(trace=arguments['trace'])


@certified(
    bound=lambda graph, arguments: math.ceil(max_degree(g=graph) / 3),
    graph_of=_triangulation_graph,
)
def color_iterated_triangulation(trace: TriangulationTrace) -> EdgeColoring:
    """
    Color ``Tr(n)``, ``n >= 1``, with the colors 1, 2 and 3 and impropriety
    at most ``ceil(Δ/3)``.

    The outer triangle gets 1, 2 and 3. Every face has all three colors, so
    a vertex placed in a face gets, on its edge to each corner, the color of
    the face edge opposite that corner. At every vertex the three colors
    then appear equally often, up to one.

    Raises:
        PreconditionFailed: ``trace`` has no levels.
    """
    if not trace.levels:
        raise PreconditionFailed(
            'Tr(0) is a triangle, which has impropriety 2.',
        )

    a, b, c = trace.outer
    colors: Dict[Pair, int] = {pair(a, b): 1, pair(b, c): 2, pair(c, a): 3}
    for level in trace.levels:
        for vertex, corners in level:
            for index, corner in enumerate(corners):
                across = pair(
                    corners[(index + 1) % 3],
                    corners[(index + 2) % 3],
                )
                colors[pair(vertex, corner)] = colors[across]

    graph = replay_triangulation(trace=trace)
    return make_coloring(colors=[colors[pair(u, v)] for u, v in graph.edges])
