"""
Colorings of corona products ``G ⊙ H``.

Each copy ``H_v`` is colored on its own together with the edges joining it
to ``v``, then shifted so that those edges start one above the largest color
of ``G`` at ``v``. The colors at ``v`` then stay an interval.
"""

import logging
import math
from typing import Any, Dict, List, Mapping, Optional, Tuple

from interval_impropriety._constants import CoronaStrategy, FamilyKind
from interval_impropriety.coloring import EdgeColoring, make_coloring, verify
from interval_impropriety.families import (
    CaterpillarLabels,
    CoronaLayout,
    FamilyRecipe,
    SpiderLabels,
    corona,
    generate,
)
from interval_impropriety.graph import Graph, max_degree

from ._checks import certified
from ._partial import Pair, pair
from .exceptions import PreconditionFailed

LOGGER = logging.getLogger(__name__)

# Spiders with more legs than this are not colored with the spider strategy.
MAX_SPIDER_LEGS = 4

_DEFAULT_STRATEGIES = {
    FamilyKind.PATH: CoronaStrategy.PATH,
    FamilyKind.CYCLE: CoronaStrategy.CYCLE,
    FamilyKind.STAR: CoronaStrategy.STAR,
    FamilyKind.SPIDER: CoronaStrategy.SPIDER,
    FamilyKind.CATERPILLAR: CoronaStrategy.CATERPILLAR,
}

# A local coloring of one copy of H: the colors of the edges from the hub
# to each vertex of H, in vertex order, and the colors of the edges of H, in
# edge order.
LocalColoring = Tuple[List[int], List[int]]


def default_strategy(kind: FamilyKind) -> CoronaStrategy:
    """
    Return the strategy for a family: its own when it has one, otherwise
    the general strategy.
    """
    return _DEFAULT_STRATEGIES.get(kind, CoronaStrategy.GENERAL)


def _path_local(h: Graph) -> LocalColoring:
    """
    ``x v_i`` and ``v_i v_{i+1}`` get ``i`` and ``x v_k`` gets ``k``.
    """
    hub = list(range(1, h.vertex_count + 1))
    return hub, [min(u, v) + 1 for u, v in h.edges]


def _star_local(h: Graph) -> LocalColoring:
    """
    ``x v_i`` and ``y v_i`` get ``i`` and ``xy`` gets ``k + 1``, where ``y``
    is the center.
    """
    leaves = h.vertex_count - 1
    hub = [leaves + 1] + list(range(1, leaves + 1))
    return hub, [max(u, v) for u, v in h.edges]


def _cycle_local(h: Graph) -> LocalColoring:
    """
    Color ``C_k`` and its hub edges with impropriety at most 2.

    The rim colors rise from 1 to the middle of the cycle and fall back to
    1, and the hub colors follow them starting from 0.
    """
    k = h.vertex_count
    half = k // 2
    if k % 2 == 0:
        rim = list(range(1, half + 1)) + list(range(half, 0, -1))
        hub = (
            [0]
            + list(range(2, half + 1))
            + [half + 1]
            + list(range(half - 1, 0, -1))
        )
    else:
        rim = list(range(1, half + 2)) + list(range(half, 0, -1))
        hub = [0] + list(range(1, half + 1)) + list(range(half, 0, -1))
    return hub, rim


def _spider_local(h: Graph, labels: SpiderLabels) -> LocalColoring:
    """
    ``x v`` gets 0 for the center ``v``. On the first two legs the edges
    ``v u_1`` and ``x u_1`` get 1, and ``u_i u_{i+1}`` and ``x u_{i+1}`` get
    ``i + 1``. The other legs do the same with negative colors.
    """
    if len(labels.legs) > MAX_SPIDER_LEGS:
        raise PreconditionFailed(
            f'The spider strategy colors spiders with at most '
            f'{MAX_SPIDER_LEGS} legs, got {len(labels.legs)}.',
        )

    hub = [0] * h.vertex_count
    edge_colors: Dict[Pair, int] = {}
    for index, leg in enumerate(labels.legs):
        sign = 1 if index < 2 else -1
        previous = labels.center
        for step, vertex in enumerate(leg, start=1):
            hub[vertex] = sign * step
            edge_colors[pair(previous, vertex)] = sign * step
            previous = vertex
    return hub, [edge_colors[pair(*edge)] for edge in h.edges]


def _caterpillar_local(
    h: Graph,
    labels: CaterpillarLabels,
) -> LocalColoring:
    """
    Walk along the spine. Spine vertex ``v_i`` gets hub color
    ``c_{i-1} + 1``, its leaves the next colors, each shared by the leaf's
    two edges, and the spine edge ``v_i v_{i+1}`` gets ``c_i + 1``, where
    ``c_i`` is the last color used at ``v_i``'s leaves (``c_0 = 0``).
    """
    hub = [0] * h.vertex_count
    edge_colors: Dict[Pair, int] = {}
    used = 0
    for position, (vertex, leaves) in enumerate(
        zip(labels.spine, labels.leaves),
    ):
        hub[vertex] = used + 1
        for offset, leaf in enumerate(leaves, start=2):
            hub[leaf] = used + offset
            edge_colors[pair(vertex, leaf)] = used + offset
        used += 1 + len(leaves)
        if position + 1 < len(labels.spine):
            following = labels.spine[position + 1]
            edge_colors[pair(vertex, following)] = used + 1
    return hub, [edge_colors[pair(*edge)] for edge in h.edges]


def _general_local(h: Graph) -> LocalColoring:
    """
    Every hub edge gets 1 and every edge of ``H`` gets 2.
    """
    return [1] * h.vertex_count, [2] * h.edge_count


def _three_set_local(h: Graph) -> LocalColoring:
    """
    The vertices of ``H`` are split into three sets by index modulo 3. The
    hub edges to set ``i`` get ``i`` and every edge of ``H`` gets 2.

    Raises:
        PreconditionFailed: ``H`` has fewer than three vertices.
    """
    if h.vertex_count < 3:
        raise PreconditionFailed(
            'The three-set strategy needs H to have at least 3 vertices.',
        )
    hub = [vertex % 3 + 1 for vertex in range(h.vertex_count)]
    return hub, [2] * h.edge_count


def _local_coloring(
    h: Graph,
    trace: Any,
    kind: FamilyKind,
    strategy: CoronaStrategy,
) -> LocalColoring:
    needed = {
        CoronaStrategy.PATH: FamilyKind.PATH,
        CoronaStrategy.CYCLE: FamilyKind.CYCLE,
        CoronaStrategy.STAR: FamilyKind.STAR,
        CoronaStrategy.SPIDER: FamilyKind.SPIDER,
        CoronaStrategy.CATERPILLAR: FamilyKind.CATERPILLAR,
    }
    if strategy in needed and kind is not needed[strategy]:
        raise PreconditionFailed(
            f'The {strategy.value} strategy needs H to be a '
            f'{needed[strategy].value}, got {kind.value}.',
        )

    if strategy is CoronaStrategy.PATH:
        return _path_local(h=h)
    if strategy is CoronaStrategy.STAR:
        return _star_local(h=h)
    if strategy is CoronaStrategy.CYCLE:
        return _cycle_local(h=h)
    if strategy is CoronaStrategy.SPIDER:
        return _spider_local(h=h, labels=trace)
    if strategy is CoronaStrategy.CATERPILLAR:
        return _caterpillar_local(h=h, labels=trace)
    if strategy is CoronaStrategy.THREE_SET:
        return _three_set_local(h=h)
    return _general_local(h=h)


def _strategy(arguments: Mapping[str, Any]) -> CoronaStrategy:
    strategy = arguments['strategy']
    if strategy is None:
        return default_strategy(kind=arguments['h_recipe'].kind)
    return CoronaStrategy(strategy)


def _corona_bound(graph: Graph, arguments: Mapping[str, Any]) -> int:
    g = arguments['g']
    h, _ = generate(recipe=arguments['h_recipe'])
    report = verify(g=g, c=arguments['g_coloring'])
    impropriety = report.impropriety or 0
    strategy = _strategy(arguments=arguments)
    if strategy is CoronaStrategy.GENERAL:
        return max(impropriety, h.vertex_count)
    if strategy is CoronaStrategy.THREE_SET:
        return max(
            impropriety,
            math.ceil(h.vertex_count / 3),
            max_degree(g=h) + 1,
        )
    return max(2, impropriety)


def _corona_graph(arguments: Mapping[str, Any]) -> Graph:
    h, _ = generate(recipe=arguments['h_recipe'])
    graph, _ = corona(g=arguments['g'], h=h)
    return graph


@certified(bound=_corona_bound, graph_of=_corona_graph)
def color_corona(
    g: Graph,
    g_coloring: EdgeColoring,
    h_recipe: FamilyRecipe,
    layout: CoronaLayout,
    strategy: Optional[CoronaStrategy] = None,
) -> EdgeColoring:
    """
    Color ``G ⊙ H`` from an interval coloring of ``G``.

    The guaranteed impropriety is ``max(2, μ)`` for the path, cycle, star,
    spider and caterpillar strategies, where ``μ`` is the impropriety of
    ``g_coloring``. It is ``max(μ, |V(H)|)`` for the general strategy and
    ``max(μ, ceil(|V(H)| / 3), Δ(H) + 1)`` for the three-set strategy.

    Args:
        g: The graph ``G``.
        g_coloring: An interval coloring of ``G``.
        h_recipe: The recipe which generates ``H``.
        layout: Where the copies of ``H`` are, from
            :func:`interval_impropriety.families.corona`.
        strategy: How to color the copies. By default, the strategy for
            ``H``'s family, or the general strategy.

    Raises:
        PreconditionFailed: ``g_coloring`` is not an interval coloring of
            ``G``, ``layout`` does not fit ``G`` and ``H``, the strategy
            does not fit ``H``'s family, or a spider has more than four legs.
    """
    report = verify(g=g, c=g_coloring)
    if not report.all_intervals:
        raise PreconditionFailed(
            'The coloring of G is not an interval coloring at vertices '
            f'{list(report.offending_vertices())}.',
        )

    h, trace = generate(recipe=h_recipe)
    consistent = (
        layout.base_vertex_count == g.vertex_count
        and len(layout.copies) == g.vertex_count
        and all(len(copy) == h.vertex_count for copy in layout.copies)
        and all(len(ids) == h.edge_count for ids in layout.copy_edges)
    )
    if not consistent:
        raise PreconditionFailed('The layout does not match G and H.')

    chosen = strategy or default_strategy(kind=h_recipe.kind)
    hub, inner = _local_coloring(
        h=h,
        trace=trace,
        kind=h_recipe.kind,
        strategy=chosen,
    )

    colors = list(g_coloring.colors)
    total = g.edge_count + g.vertex_count * (h.edge_count + h.vertex_count)
    colors.extend([0] * (total - len(colors)))
    for vertex in range(g.vertex_count):
        top = report.profiles[vertex].max_color or 0
        offset = top + 1 - min(hub, default=1)
        for edge_id, color in zip(layout.attachment_edges[vertex], hub):
            colors[edge_id] = color + offset
        for edge_id, color in zip(layout.copy_edges[vertex], inner):
            colors[edge_id] = color + offset

    LOGGER.debug(
        'Colored a corona with %d copies using the %s strategy',
        g.vertex_count,
        chosen.value,
    )
    return make_coloring(colors=colors)
