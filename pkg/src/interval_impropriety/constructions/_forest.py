"""
Interval colorings of forests.
"""

from collections import deque
from typing import Deque, List, Optional, Tuple

import networkx as nx

from interval_impropriety.coloring import EdgeColoring, make_coloring
from interval_impropriety.graph import Graph

from ._checks import certified
from .exceptions import PreconditionFailed


@certified(bound=lambda graph, arguments: 1)
def color_forest(g: Graph) -> EdgeColoring:
    """
    Properly interval color a forest.

    Each tree is rooted at its smallest vertex and colored breadth first.
    The root's edges get ``1, 2, ...``. A vertex whose parent edge has color
    ``c`` gives its other edges ``c + 1, c + 2, ...``.

    Raises:
        PreconditionFailed: ``g`` has a cycle.
    """
    if g.vertex_count and not nx.is_forest(g.to_networkx()):
        raise PreconditionFailed('Only forests can be colored this way.')

    colors: List[int] = [0] * g.edge_count
    visited = [False] * g.vertex_count
    for root in range(g.vertex_count):
        if visited[root]:
            continue
        visited[root] = True
        queue: Deque[Tuple[int, Optional[int]]] = deque([(root, None)])
        while queue:
            vertex, parent_color = queue.popleft()
            next_color = 1 if parent_color is None else parent_color + 1
            for neighbor, edge_id in zip(
                g.adjacency[vertex],
                g.incidence[vertex],
            ):
                if visited[neighbor]:
                    continue
                visited[neighbor] = True
                colors[edge_id] = next_color
                queue.append((neighbor, next_color))
                next_color += 1
    return make_coloring(colors=colors)
