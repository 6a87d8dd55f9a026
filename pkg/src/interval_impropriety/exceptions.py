"""
Exceptions raised for invalid graphs and colorings.

Every exception raised by this package derives from
:class:`IntervalImproprietyError`.
"""

from typing import Sequence, Tuple


class IntervalImproprietyError(Exception):
    """
    Base class for errors raised by ``interval_impropriety``.
    """


class InvalidGraph(IntervalImproprietyError, ValueError):
    """
    Exception raised when a vertex count and edge list do not describe a
    simple graph.
    """


class SelfLoop(InvalidGraph):
    """
    Exception raised when an edge joins a vertex to itself.
    """

    def __init__(self, vertex: int) -> None:
        """
        Attributes:
            vertex: The vertex with a loop.
        """
        super().__init__(f'Edge ({vertex}, {vertex}) is a loop.')
        self.vertex = vertex


class DuplicateEdge(InvalidGraph):
    """
    Exception raised when the same unordered pair is given twice.
    """

    def __init__(self, edge: Tuple[int, int]) -> None:
        """
        Attributes:
            edge: The repeated edge, as given the second time.
        """
        super().__init__(f'Edge {edge} is given more than once.')
        self.edge = edge


class EndpointOutOfRange(InvalidGraph):
    """
    Exception raised when an edge endpoint is not a vertex of the graph.
    """

    def __init__(self, edge: Tuple[int, int], vertex_count: int) -> None:
        """
        Attributes:
            edge: The edge with an invalid endpoint.
            vertex_count: The number of vertices in the graph.
        """
        super().__init__(
            f'Edge {edge} has an endpoint outside [0, {vertex_count}).',
        )
        self.edge = edge
        self.vertex_count = vertex_count


class GraphTooLarge(IntervalImproprietyError):
    """
    Exception raised when a graph is too large for an exact procedure.
    """

    def __init__(self, vertex_count: int, limit: int) -> None:
        """
        Attributes:
            vertex_count: The number of vertices in the given graph.
            limit: The largest supported number of vertices.
        """
        super().__init__(
            f'Graph has {vertex_count} vertices, the limit is {limit}.',
        )
        self.vertex_count = vertex_count
        self.limit = limit


class MalformedDocument(IntervalImproprietyError, ValueError):
    """
    Exception raised when a JSON document does not have the expected shape.
    """


class MissingEdgeColor(IntervalImproprietyError):
    """
    Exception raised when a coloring does not give every edge a color.
    """

    def __init__(self, edge_count: int, color_count: int) -> None:
        """
        Attributes:
            edge_count: The number of edges in the graph.
            color_count: The number of colors in the coloring.
        """
        super().__init__(
            f'The graph has {edge_count} edges but the coloring has '
            f'{color_count} colors.',
        )
        self.edge_count = edge_count
        self.color_count = color_count


class EmptyColoring(IntervalImproprietyError):
    """
    Exception raised when normalizing a coloring with no edges.
    """


class NotAnIntervalColoring(IntervalImproprietyError):
    """
    Exception raised when a coloring is required to be an interval coloring
    but is not.
    """

    def __init__(self, vertices: Sequence[int]) -> None:
        """
        Attributes:
            vertices: The vertices whose incident colors are not an interval.
        """
        listed = ', '.join(str(vertex) for vertex in vertices)
        super().__init__(f'Colors are not an interval at vertices: {listed}.')
        self.vertices = tuple(vertices)
