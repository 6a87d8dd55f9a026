"""
A plain enumerator of interval colorings, used to check the pruned search.
"""

from collections import Counter
from typing import Dict, List

from interval_impropriety.graph import Graph, components, max_degree


def _is_interval(counts: Dict[int, int]) -> bool:
    return max(counts) - min(counts) + 1 == len(counts)


def _component_impropriety(g: Graph) -> int:
    degree = [g.degree(vertex) for vertex in range(g.vertex_count)]
    window = sum(d - 1 for d in degree if d)
    counts: List[Dict[int, int]] = [Counter() for _ in range(g.vertex_count)]
    colored = [0] * g.vertex_count
    best = max_degree(g=g)

    def rejected(vertex: int) -> bool:
        complete = colored[vertex] == degree[vertex]
        return complete and not _is_interval(counts=counts[vertex])

    def extend(position: int, multiplicity: int) -> None:
        nonlocal best
        if multiplicity >= best:
            return
        if position == g.edge_count:
            best = multiplicity
            return
        u, v = g.edges[position]
        for color in range(window + 1):
            for vertex in (u, v):
                counts[vertex][color] += 1
                colored[vertex] += 1
            if not (rejected(vertex=u) or rejected(vertex=v)):
                extend(
                    position=position + 1,
                    multiplicity=max(
                        multiplicity,
                        counts[u][color],
                        counts[v][color],
                    ),
                )
            for vertex in (u, v):
                counts[vertex][color] -= 1
                if counts[vertex][color] == 0:
                    del counts[vertex][color]
                colored[vertex] -= 1

    extend(position=0, multiplicity=0)
    return best


def reference_impropriety(g: Graph) -> int:
    """
    Return the interval coloring impropriety by trying every coloring with
    colors in ``[0, sum(d(v) - 1)]``.

    Edges are colored in input order with no symmetry breaking. A partial
    coloring is only cut off when a vertex with all its edges colored does
    not see an interval, or when it cannot beat the best coloring found.
    Only for small graphs.
    """
    return max(
        (
            _component_impropriety(g=component.graph)
            for component in components(g=g)
            if component.graph.edge_count
        ),
        default=0,
    )
