"""
Simple undirected graphs with stable vertex and edge indices.
"""

import json
from dataclasses import dataclass, field
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Sequence,
    Set,
    Tuple,
)

import networkx as nx

from interval_impropriety.exceptions import (
    DuplicateEdge,
    EndpointOutOfRange,
    MalformedDocument,
    SelfLoop,
)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    A finite simple undirected graph.

    Vertices are ``0, ..., vertex_count - 1``. An edge is identified by its
    position in ``edges`` and that position never changes.

    Args:
        vertex_count: The number of vertices.
        edges: The edges, in the order they were given.

    Attributes:
        adjacency: For each vertex, its neighbors in edge order.
        incidence: For each vertex, the ids of its incident edges in edge
            order.
    """

    vertex_count: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[int, ...], ...] = field(
        init=False,
        repr=False,
        compare=False,
    )
    incidence: Tuple[Tuple[int, ...], ...] = field(
        init=False,
        repr=False,
        compare=False,
    )

    def __post_init__(self) -> None:
        """
        Validate the edges and derive adjacency.

        Raises:
            SelfLoop: An edge joins a vertex to itself.
            DuplicateEdge: An unordered pair is given twice.
            EndpointOutOfRange: An endpoint is not a vertex.
        """
        seen: Set[FrozenSet[int]] = set()
        neighbors: List[List[int]] = [[] for _ in range(self.vertex_count)]
        incident: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for edge_id, (u, v) in enumerate(self.edges):
            if u == v:
                raise SelfLoop(vertex=u)
            for endpoint in (u, v):
                if not 0 <= endpoint < self.vertex_count:
                    raise EndpointOutOfRange(
                        edge=(u, v),
                        vertex_count=self.vertex_count,
                    )
            key = frozenset((u, v))
            if key in seen:
                raise DuplicateEdge(edge=(u, v))
            seen.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
            incident[u].append(edge_id)
            incident[v].append(edge_id)

        adjacency = tuple(tuple(items) for items in neighbors)
        incidence = tuple(tuple(items) for items in incident)
        object.__setattr__(self, 'adjacency', adjacency)
        object.__setattr__(self, 'incidence', incidence)

    @property
    def edge_count(self) -> int:
        """
        The number of edges.
        """
        return len(self.edges)

    def degree(self, vertex: int) -> int:
        """
        Return the number of edges incident with ``vertex``.
        """
        return len(self.adjacency[vertex])

    def edge_id(self, u: int, v: int) -> int:
        """
        Return the id of the edge joining ``u`` and ``v``.

        Raises:
            KeyError: ``u`` and ``v`` are not adjacent.
        """
        for edge_id in self.incidence[u]:
            if v in self.edges[edge_id]:
                return edge_id
        raise KeyError((u, v))

    def has_edge(self, u: int, v: int) -> bool:
        """
        Return whether ``u`` and ``v`` are adjacent.
        """
        return v in self.adjacency[u]

    def to_networkx(self) -> nx.Graph:
        """
        Return an equivalent ``networkx`` graph on the same vertex indices.
        """
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.vertex_count))
        nx_graph.add_edges_from(self.edges)
        return nx_graph


def make_graph(vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Build a validated graph.

    Args:
        vertex_count: The number of vertices.
        edges: Pairs of vertex indices. The order is kept and defines edge
            ids.

    Returns:
        The graph.

    Raises:
        SelfLoop: An edge joins a vertex to itself.
        DuplicateEdge: An unordered pair is given twice.
        EndpointOutOfRange: An endpoint is not in ``[0, vertex_count)``.
    """
    pairs = tuple((int(u), int(v)) for u, v in edges)
    return Graph(vertex_count=vertex_count, edges=pairs)


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """
    Convert a ``networkx`` graph, numbering vertices in sorted node order.
    """
    nodes = sorted(nx_graph.nodes())
    index = {node: position for position, node in enumerate(nodes)}
    edges = sorted(
        tuple(sorted((index[u], index[v]))) for u, v in nx_graph.edges()
    )
    return make_graph(vertex_count=len(nodes), edges=edges)


def degrees(g: Graph) -> Tuple[int, ...]:
    """
    Return the degree of every vertex.
    """
    return tuple(len(neighbors) for neighbors in g.adjacency)


def max_degree(g: Graph) -> int:
    """
    Return the maximum degree, which is 0 for an edgeless graph.
    """
    return max(degrees(g), default=0)


def min_degree(g: Graph) -> int:
    """
    Return the minimum degree, which is 0 for a graph with no vertices.
    """
    return min(degrees(g), default=0)


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    """
    Return the graph with vertex ``v`` renamed ``permutation[v]``.

    Edge ids are kept.
    """
    edges = [(permutation[u], permutation[v]) for u, v in g.edges]
    return make_graph(vertex_count=g.vertex_count, edges=edges)


@dataclass(frozen=True)
class Component:
    """
    A connected component, renumbered densely.

    Args:
        graph: The component as a graph in its own right.
        vertices: ``vertices[i]`` is the original index of vertex ``i``.
        edge_ids: ``edge_ids[i]`` is the original id of edge ``i``.
    """

    graph: Graph
    vertices: Tuple[int, ...]
    edge_ids: Tuple[int, ...]


def components(g: Graph) -> List[Component]:
    """
    Split a graph into connected components, ordered by smallest vertex.

    Within a component, vertices keep their relative order and edges keep
    their relative order.
    """
    result = []
    parts = sorted(
        (sorted(part) for part in nx.connected_components(g.to_networkx())),
        key=lambda part: part[0],
    )
    for part in parts:
        index = {vertex: position for position, vertex in enumerate(part)}
        edge_ids = tuple(
            edge_id
            for edge_id, (u, _) in enumerate(g.edges)
            if u in index
        )
        edges = [
            (index[g.edges[edge_id][0]], index[g.edges[edge_id][1]])
            for edge_id in edge_ids
        ]
        result.append(
            Component(
                graph=make_graph(vertex_count=len(part), edges=edges),
                vertices=tuple(part),
                edge_ids=edge_ids,
            ),
        )
    return result


def is_connected(g: Graph) -> bool:
    """
    Return whether the graph is connected. The empty graph is not.
    """
    if g.vertex_count == 0:
        return False
    return bool(nx.is_connected(g.to_networkx()))


def edge_set(g: Graph) -> FrozenSet[FrozenSet[int]]:
    """
    Return the edges as a set of unordered pairs.
    """
    return frozenset(frozenset(edge) for edge in g.edges)


def graph_to_json(g: Graph) -> Dict[str, Any]:
    """
    Return the JSON document ``{"n": ..., "edges": [[u, v], ...]}``.
    """
    return {'n': g.vertex_count, 'edges': [[u, v] for u, v in g.edges]}


def _is_integer(value: Any) -> bool:
    # JSON true and false load as bool, which is a subclass of int.
    return isinstance(value, int) and not isinstance(value, bool)


def graph_from_json(document: Any) -> Graph:
    """
    Read a graph from a parsed JSON document.

    Raises:
        MalformedDocument: The document does not have the expected shape.
        InvalidGraph: The document describes something which is not a simple
            graph.
    """
    try:
        vertex_count = document['n']
        raw_edges = document['edges']
    except (KeyError, TypeError) as exc:
        message = 'A graph document needs "n" and "edges".'
        raise MalformedDocument(message) from exc

    if not _is_integer(value=vertex_count) or vertex_count < 0:
        raise MalformedDocument('"n" must be a nonnegative integer.')

    if not isinstance(raw_edges, list):
        raise MalformedDocument('"edges" must be a list of pairs.')

    edges = []
    for raw_edge in raw_edges:
        valid = (
            isinstance(raw_edge, list)
            and len(raw_edge) == 2
            and all(_is_integer(value=endpoint) for endpoint in raw_edge)
        )
        if not valid:
            raise MalformedDocument(f'Invalid edge {raw_edge!r}.')
        edges.append((raw_edge[0], raw_edge[1]))

    return make_graph(vertex_count=vertex_count, edges=edges)


def load_graph(text: str) -> Graph:
    """
    Parse a graph from JSON text.

    Raises:
        MalformedDocument: The text is not JSON or has the wrong shape.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f'Invalid JSON: {exc}') from exc
    return graph_from_json(document=document)
