"""
Partial colorings keyed by vertex pairs, for colorers which add or remove
vertices as they go.
"""

from typing import Counter, Dict, FrozenSet, Iterable, List, Optional, Tuple

from interval_impropriety._constants import SearchStatus
from interval_impropriety.coloring import EdgeColoring, make_coloring
from interval_impropriety.exact import SearchBudget, exists_k_improper
from interval_impropriety.graph import Graph, components, make_graph

from .exceptions import ExtensionFailed

Pair = FrozenSet[int]


def pair(u: int, v: int) -> Pair:
    """
    Return the unordered pair ``{u, v}``.
    """
    return frozenset((u, v))


class PartialColoring:
    """
    Colors of some edges, with the colors seen at each vertex.

    Args:
        k: The largest number of edges of one color allowed at a vertex.
    """

    def __init__(self, k: int) -> None:
        self.k = k
        self.colors: Dict[Pair, int] = {}
        self._at: Dict[int, Counter[int]] = {}

    def __getitem__(self, edge: Tuple[int, int]) -> int:
        return self.colors[pair(*edge)]

    def __setitem__(self, edge: Tuple[int, int], color: int) -> None:
        key = pair(*edge)
        if key in self.colors:
            del self[edge]
        self.colors[key] = color
        for vertex in key:
            self._at.setdefault(vertex, Counter())[color] += 1

    def __delitem__(self, edge: Tuple[int, int]) -> None:
        key = pair(*edge)
        color = self.colors.pop(key)
        for vertex in key:
            counts = self._at[vertex]
            counts[color] -= 1
            if counts[color] == 0:
                del counts[color]

    def at(self, vertex: int) -> Counter[int]:
        """
        Return the count of each color at ``vertex``.
        """
        return self._at.get(vertex, Counter())

    def admits(self, vertex: int, color: int) -> bool:
        """
        Return whether ``vertex`` can take another edge of ``color`` and
        keep its colors an interval within the allowed count.
        """
        counts = self.at(vertex)
        if counts[color] + 1 > self.k:
            return False
        present = [c for c, count in counts.items() if count]
        if not present:
            return True
        return min(present) - 1 <= color <= max(present) + 1

    def update(self, colors: Dict[Pair, int]) -> None:
        """
        Set the colors of several edges.
        """
        for key, color in colors.items():
            u, v = sorted(key)
            self[(u, v)] = color

    def for_graph(self, g: Graph) -> EdgeColoring:
        """
        Return the colors of the edges of ``g`` in edge id order.
        """
        return make_coloring(colors=[self[edge] for edge in g.edges])


def solve_exactly(
    edges: Iterable[Tuple[int, int]],
    k: int,
    budget: Optional[SearchBudget] = None,
) -> Dict[Pair, int]:
    """
    Color the graph formed by ``edges`` with the exact solver, one component
    at a time.

    Raises:
        ExtensionFailed: Some component has no k-improper interval coloring
            or the budget ran out.
    """
    listed: List[Tuple[int, int]] = list(edges)
    vertices = sorted({vertex for edge in listed for vertex in edge})
    index = {vertex: position for position, vertex in enumerate(vertices)}
    graph = make_graph(
        vertex_count=len(vertices),
        edges=[(index[u], index[v]) for u, v in listed],
    )

    result: Dict[Pair, int] = {}
    for component in components(g=graph):
        decision = exists_k_improper(
            g=component.graph,
            k=k,
            budget=budget or SearchBudget(),
        )
        if decision.status is not SearchStatus.FOUND:
            raise ExtensionFailed(
                f'The exact solver found no {k}-improper interval coloring '
                f'of a subgraph with {component.graph.edge_count} edges: '
                f'{decision.status.value}.',
            )
        assert decision.witness is not None
        colors = decision.witness.colors
        for edge_id, color in zip(component.edge_ids, colors):
            u, v = listed[edge_id]
            result[pair(u, v)] = color
    return result
