"""
Colorings of 2-trees, squares of paths and 2-paths.
"""

import logging
import math
from typing import Dict, List, Optional, Tuple

from interval_impropriety.coloring import EdgeColoring, make_coloring
from interval_impropriety.families import (
    TwoPathSequence,
    TwoTreeTrace,
    replay_two_tree,
    square_of_path,
    two_path_graph,
)
from interval_impropriety.families.exceptions import InvalidTrace
from interval_impropriety.graph import Graph, edge_set, max_degree

from ._checks import ConstructionStats, certified
from ._partial import PartialColoring, solve_exactly
from .exceptions import PreconditionFailed, TraceMismatch

LOGGER = logging.getLogger(__name__)

# For each first choice at u, the colors to try at w, relative to x.
_SECOND_CHOICES = {
    0: (0, -1, 1),
    -1: (-1, 0, -2),
    1: (1, 0, 2),
}


def _two_tree_bound(graph: Graph, arguments: object) -> int:
    return math.ceil(max_degree(g=graph) / 3)


def _diamond(trace: TwoTreeTrace) -> Dict[Tuple[int, int], int]:
    """
    Color the diamond with impropriety 1: the edge between the two
    vertices of degree 3 gets 3, and each vertex of degree 2 sees 1 and 2.
    """
    a, b, c = trace.base
    ((v, (x, y)),) = trace.additions
    (w,) = {a, b, c} - {x, y}
    return {(x, y): 3, (w, y): 1, (w, x): 2, (v, y): 2, (v, x): 1}


def _extend(
    coloring: PartialColoring,
    vertex: int,
    u: int,
    w: int,
) -> bool:
    """
    Color the edges from ``vertex`` to ``u`` and ``w`` within
    ``x - 2, ..., x + 2``, where ``x`` is the color of ``uw``.
    """
    x = coloring[(u, w)]
    for first in (0, -1, 1):
        if not coloring.admits(vertex=u, color=x + first):
            continue
        for second in _SECOND_CHOICES[first]:
            if coloring.admits(vertex=w, color=x + second):
                coloring[(vertex, u)] = x + first
                coloring[(vertex, w)] = x + second
                return True
    return False


@certified(bound=_two_tree_bound)
def color_two_tree(
    g: Graph,
    trace: TwoTreeTrace,
    stats: Optional[ConstructionStats] = None,
) -> EdgeColoring:
    """
    Color a 2-tree with maximum degree at least 3 with impropriety at most
    ``ceil(Δ/3)``.

    The diamond gets a fixed coloring with impropriety 1. Otherwise the base
    triangle gets one color and the vertices are added back in trace order.
    A vertex ``v`` joined to ``u`` and ``w`` with ``x`` the color of ``uw``
    gets ``vu`` in ``x, x - 1, x + 1``, the first color ``u`` can take. Then
    ``vw`` gets a color next to it that ``w`` can take, trying ``x`` first
    and then moving away from ``x``.

    If no choice fits, the graph built so far is recolored by the exact
    solver, which is recorded in ``stats``.

    Raises:
        TraceMismatch: ``trace`` does not build ``g``.
        PreconditionFailed: The maximum degree of ``g`` is less than 3.
        ExtensionFailed: The exact solver could not color the graph built so
            far.
    """
    try:
        replayed = replay_two_tree(trace=trace)
    except InvalidTrace as exc:
        raise TraceMismatch(str(exc)) from exc
    if edge_set(g=replayed) != edge_set(g=g):
        raise TraceMismatch('The trace does not build the given graph.')

    delta = max_degree(g=g)
    if delta < 3:
        raise PreconditionFailed(
            f'A 2-tree with maximum degree {delta} is outside the range of '
            'this coloring.',
        )

    k = math.ceil(delta / 3)
    coloring = PartialColoring(k=k)
    if delta == 3:
        for edge, color in _diamond(trace=trace).items():
            coloring[edge] = color
        return coloring.for_graph(g=g)

    a, b, c = trace.base
    built: List[Tuple[int, int]] = [(a, b), (b, c), (a, c)]
    for edge in built:
        coloring[edge] = 0

    for vertex, (u, w) in trace.additions:
        built.extend([(vertex, u), (vertex, w)])
        if _extend(coloring=coloring, vertex=vertex, u=u, w=w):
            continue
        LOGGER.warning(
            'Adding vertex %d failed; recoloring %d edges exactly.',
            vertex,
            len(built),
        )
        coloring.update(colors=solve_exactly(edges=built, k=k))
        if stats is not None:
            stats.fallbacks.append(len(built))

    return coloring.for_graph(g=g)


# How to add vertex v to the edge xy with color a, from the colors at y
# other than a and the color at x other than a, all relative to a. The
# values are the colors of vy and vx relative to a.
_SQUARE_OF_PATH_STEPS = {
    (frozenset({1, 2}), -1): (-1, -2),
    (frozenset({1, 2}), 1): (3, 2),
    (frozenset({-1, 1}), -1): (2, 1),
    (frozenset({-1, 1}), 1): (-2, -1),
    (frozenset({-2, -1}), -1): (-3, -2),
    (frozenset({-2, -1}), 1): (1, 2),
}


@certified(bound=lambda graph, arguments: 1)
def color_square_of_path(n: int) -> Tuple[Graph, EdgeColoring]:
    """
    Properly interval color the square of ``P_n``, ``n >= 4``.

    Vertices ``0, 1, 2, 3`` form a colored diamond. Vertex ``i`` is then
    joined to ``x = i - 1`` and ``y = i - 2``. Before it is added, ``y``
    has three colors and ``x`` two, each an interval containing
    ``a``, the color of ``xy``. Which intervals they are decides the colors
    of ``vy`` and ``vx``.

    Raises:
        PreconditionFailed: ``n`` is less than 4.
    """
    if n < 4:
        raise PreconditionFailed(f'n must be at least 4, got {n}.')

    graph, _ = square_of_path(n=n)
    coloring = PartialColoring(k=1)
    diamond = {(1, 2): 3, (0, 1): 1, (0, 2): 2, (1, 3): 2, (2, 3): 1}
    for edge, color in diamond.items():
        coloring[edge] = color

    for vertex in range(4, n):
        x, y = vertex - 1, vertex - 2
        a = coloring[(x, y)]
        at_y = frozenset(
            color - a for color in coloring.at(vertex=y) if color != a
        )
        (at_x,) = (color - a for color in coloring.at(vertex=x) if color != a)
        to_y, to_x = _SQUARE_OF_PATH_STEPS[(at_y, at_x)]
        coloring[(vertex, y)] = a + to_y
        coloring[(vertex, x)] = a + to_x

    return graph, coloring.for_graph(g=graph)


@certified(bound=lambda graph, arguments: 2)
def color_two_path(seq: TwoPathSequence) -> Tuple[Graph, EdgeColoring]:
    """
    Color a 2-path with impropriety at most 2.

    The listed edge ``e_i`` gets color ``i`` and the remaining edge of the
    triangle ``t_i`` also gets ``i``. A vertex on ``e_a, ..., e_b`` then
    sees ``a, ..., b`` and a subset of ``max(a, 1), ..., min(b + 1, n)``.
    """
    graph = two_path_graph(sequence=seq)
    listed = range(len(seq.edges))
    remaining = range(1, len(seq.edges))
    colors = list(listed) + list(remaining)
    return graph, make_coloring(colors=colors)

