"""
Colorings of outerplanar graphs with maximum degree at least 6, by removing
one vertex of degree 2 at a time.
"""

import logging
import math
from typing import Dict, List, Optional, Tuple

import networkx as nx

from interval_impropriety.coloring import EdgeColoring, make_coloring
from interval_impropriety.graph import Graph, components, max_degree

from ._checks import ConstructionStats, certified
from ._partial import Pair, PartialColoring, pair, solve_exactly
from .exceptions import NotOuterplanar, PreconditionFailed

LOGGER = logging.getLogger(__name__)

# Subgraphs with at most this many edges are colored by the exact solver.
BASE_EDGE_LIMIT = 12

# Subgraphs whose maximum degree is at most this are colored by the exact
# solver.
BASE_DEGREE_LIMIT = 5

# Colors for vu and vw, relative to the color of uw, where d(u) <= 4.
_TRIANGLE_CHOICES = (
    (0, 0),
    (1, 0),
    (0, 1),
    (1, 1),
    (1, 2),
    (2, 2),
    (0, -1),
    (-1, -1),
    (-1, -2),
    (-2, -2),
)

Colors = Dict[Pair, int]


def _shift_to_follow(
    first: Colors,
    second: Colors,
    vertex: int,
) -> Colors:
    """
    Shift ``second`` so that its colors at ``vertex`` start just above the
    colors of ``first`` at ``vertex``.
    """
    first_high = max(color for key, color in first.items() if vertex in key)
    second_low = min(color for key, color in second.items() if vertex in key)
    offset = first_high + 1 - second_low
    return {key: color + offset for key, color in second.items()}


def _two_vertex(graph: nx.Graph) -> Tuple[str, int, int, int]:
    """
    Choose the vertex of degree 2 to remove.

    Returns:
        ``('path', v, u, w)`` for a vertex ``v`` whose neighbors ``u`` and
        ``w`` are not adjacent, or else ``('triangle', v, u, w)`` for one
        whose neighbor ``u`` has degree at most 4.

    Raises:
        NotOuterplanar: There is no such vertex.
    """
    triangle = None
    for vertex in sorted(graph.nodes()):
        if graph.degree(vertex) != 2:
            continue
        u, w = sorted(graph.neighbors(vertex))
        if not graph.has_edge(u, w):
            return 'path', vertex, u, w
        if triangle is None:
            if graph.degree(w) <= 4 < graph.degree(u):
                u, w = w, u
            if graph.degree(u) <= 4:
                triangle = ('triangle', vertex, u, w)
    if triangle is None:
        raise NotOuterplanar(
            'A 2-connected outerplanar graph has a vertex of degree 2 with '
            'a neighbor of degree at most 4.',
        )
    return triangle


def _extend_triangle(
    colors: Colors,
    k: int,
    vertex: int,
    u: int,
    w: int,
) -> Optional[Colors]:
    partial = PartialColoring(k=k)
    partial.update(colors=colors)
    x = partial[(u, w)]
    for to_u, to_w in _TRIANGLE_CHOICES:
        admitted = partial.admits(vertex=u, color=x + to_u) and (
            partial.admits(vertex=w, color=x + to_w)
        )
        if admitted:
            extended = dict(colors)
            extended[pair(vertex, u)] = x + to_u
            extended[pair(vertex, w)] = x + to_w
            return extended
    return None


def _solve_base(
    graph: nx.Graph,
    k: int,
    stats: Optional[ConstructionStats],
) -> Colors:
    if stats is not None:
        stats.base_cases += 1
    return solve_exactly(edges=list(graph.edges()), k=k)


def _color(
    graph: nx.Graph,
    k: int,
    stats: Optional[ConstructionStats],
) -> Colors:
    """
    Color an outerplanar graph with impropriety at most ``k``.
    """
    graph = graph.subgraph(
        [vertex for vertex in graph.nodes() if graph.degree(vertex)],
    ).copy()
    if graph.number_of_edges() == 0:
        return {}

    if not nx.is_connected(graph):
        colors: Colors = {}
        for part in nx.connected_components(graph):
            colors.update(_color(graph=graph.subgraph(part), k=k, stats=stats))
        return colors

    delta = max(degree for _, degree in graph.degree())
    few_edges = graph.number_of_edges() <= BASE_EDGE_LIMIT
    if few_edges or delta <= BASE_DEGREE_LIMIT:
        return _solve_base(graph=graph, k=k, stats=stats)

    cut_vertices = sorted(nx.articulation_points(graph))
    if cut_vertices:
        cut = cut_vertices[0]
        rest = graph.copy()
        rest.remove_node(cut)
        parts = sorted(
            (sorted(part) for part in nx.connected_components(rest)),
            key=lambda part: part[0],
        )
        first_side = set(parts[0]) | {cut}
        second_side = set(graph.nodes()) - set(parts[0])
        first = _color(graph=graph.subgraph(first_side), k=k, stats=stats)
        second = _color(graph=graph.subgraph(second_side), k=k, stats=stats)
        first.update(_shift_to_follow(first=first, second=second, vertex=cut))
        return first

    kind, vertex, u, w = _two_vertex(graph=graph)
    reduced = graph.copy()
    reduced.remove_node(vertex)
    if kind == 'path':
        reduced.add_edge(u, w)
        colors = _color(graph=reduced, k=k, stats=stats)
        x = colors.pop(pair(u, w))
        colors[pair(vertex, u)] = x
        colors[pair(vertex, w)] = x
        return colors

    colors = _color(graph=reduced, k=k, stats=stats)
    extended = _extend_triangle(colors=colors, k=k, vertex=vertex, u=u, w=w)
    if extended is not None:
        return extended

    LOGGER.warning(
        'No color pair extends to vertex %d; coloring %d edges exactly.',
        vertex,
        graph.number_of_edges(),
    )
    if stats is not None:
        stats.fallbacks.append(graph.number_of_edges())
    return solve_exactly(edges=list(graph.edges()), k=k)


def _outerplanar_bound(graph: Graph, arguments: object) -> int:
    return math.ceil(max_degree(g=graph) / 5)


@certified(bound=_outerplanar_bound)
def color_outerplanar(
    g: Graph,
    stats: Optional[ConstructionStats] = None,
) -> EdgeColoring:
    """
    Color an outerplanar graph with maximum degree ``Δ >= 6`` with
    impropriety at most ``k = ceil(Δ/5)``.

    Subgraphs with few edges or with maximum degree at most 5 are colored
    by the exact solver. A graph with a cut vertex is split there and the
    colors of the second side are shifted to follow the colors of the first
    side at the cut vertex. Otherwise a
    vertex ``v`` of degree 2 with neighbors ``u`` and ``w`` is removed:

    * If ``uw`` is not an edge, ``v`` is contracted into ``u``. In the
      coloring of the smaller graph, both edges at ``v`` take the color of
      ``uw``.
    * If ``uw`` is an edge and ``d(u) <= 4``, the edges at ``v`` get the
      first pair of colors near the color of ``uw`` which ``u`` and ``w``
      can take. If there is none, the graph is colored by the exact solver,
      which is recorded in ``stats``.

    Raises:
        PreconditionFailed: ``Δ`` is less than 6.
        NotOuterplanar: Some component has more than ``2n - 3`` edges, or
            there is no vertex to remove.
        ExtensionFailed: The exact solver could not color a subgraph.
    """
    delta = max_degree(g=g)
    if delta < 6:
        raise PreconditionFailed(
            f'The maximum degree must be at least 6, got {delta}.',
        )
    for component in components(g=g):
        size = component.graph.vertex_count
        limit = 2 * size - 3
        if size >= 2 and component.graph.edge_count > limit:
            raise NotOuterplanar(
                f'A component with {size} vertices has '
                f'{component.graph.edge_count} edges, more than {limit}.',
            )

    k = math.ceil(delta / 5)
    colors = _color(graph=g.to_networkx(), k=k, stats=stats)
    edges: List[Tuple[int, int]] = list(g.edges)
    return make_coloring(colors=[colors[pair(u, v)] for u, v in edges])
