"""
Tests for graphs, their validation and their JSON documents.
"""

import json
from typing import List, Tuple, Type

import pytest

from interval_impropriety.exceptions import (
    DuplicateEdge,
    EndpointOutOfRange,
    InvalidGraph,
    MalformedDocument,
    SelfLoop,
)
from interval_impropriety.graph import (
    Graph,
    components,
    degrees,
    edge_set,
    from_networkx,
    graph_to_json,
    is_connected,
    load_graph,
    make_graph,
    max_degree,
    min_degree,
    relabel,
)


class TestMakeGraph:
    """
    Tests for building validated graphs.
    """

    def test_triangle(self, triangle: Graph) -> None:
        """
        Every vertex of a triangle has degree 2.
        """
        assert triangle.vertex_count == 3
        assert triangle.edge_count == 3
        assert degrees(g=triangle) == (2, 2, 2)

    def test_diamond(self, diamond: Graph) -> None:
        """
        Edge ids follow the given order and adjacency agrees with the edges.
        """
        assert degrees(g=diamond) == (3, 2, 3, 2)
        assert diamond.edge_id(0, 2) == 4
        assert diamond.edge_id(2, 0) == 4
        assert diamond.has_edge(1, 0)
        assert not diamond.has_edge(1, 3)
        assert diamond.adjacency[0] == (1, 3, 2)
        assert diamond.incidence[0] == (0, 3, 4)

    def test_missing_edge_id(self, diamond: Graph) -> None:
        """
        Asking for the id of a non-edge raises ``KeyError``.
        """
        with pytest.raises(KeyError):
            diamond.edge_id(1, 3)

    @pytest.mark.parametrize(
        'vertex_count, edges, error',
        [
            pytest.param(2, [(0, 1), (1, 0)], DuplicateEdge, id='duplicate'),
            pytest.param(2, [(1, 1)], SelfLoop, id='loop'),
            pytest.param(2, [(0, 2)], EndpointOutOfRange, id='too large'),
            pytest.param(2, [(-1, 0)], EndpointOutOfRange, id='negative'),
        ],
    )
    def test_invalid(
        self,
        vertex_count: int,
        edges: List[Tuple[int, int]],
        error: Type[InvalidGraph],
    ) -> None:
        """
        Each kind of invalid edge list raises its own ``InvalidGraph``.
        """
        with pytest.raises(error) as exc:
            make_graph(vertex_count=vertex_count, edges=edges)
        assert isinstance(exc.value, InvalidGraph)
        assert isinstance(exc.value, ValueError)

    def test_duplicate_edge_attribute(self) -> None:
        """
        The repeated edge is kept as given.
        """
        with pytest.raises(DuplicateEdge) as exc:
            make_graph(vertex_count=3, edges=[(0, 1), (1, 2), (1, 0)])
        assert exc.value.edge == (1, 0)


class TestDegrees:
    """
    Tests for degree queries.
    """

    def test_edgeless(self) -> None:
        """
        The maximum and minimum degree of an edgeless graph are 0.
        """
        graph = make_graph(vertex_count=3, edges=[])
        assert max_degree(g=graph) == 0
        assert min_degree(g=graph) == 0

    def test_no_vertices(self) -> None:
        """
        The graph with no vertices has maximum degree 0.
        """
        assert max_degree(g=make_graph(vertex_count=0, edges=[])) == 0

    def test_diamond(self, diamond: Graph) -> None:
        """
        The diamond has maximum degree 3 and minimum degree 2.
        """
        assert max_degree(g=diamond) == 3
        assert min_degree(g=diamond) == 2


class TestComponents:
    """
    Tests for splitting graphs into components.
    """

    def test_components(self, two_triangles: Graph) -> None:
        """
        Components are ordered by smallest vertex and renumbered densely,
        keeping the ids of their edges in the whole graph.
        """
        parts = components(g=two_triangles)
        assert [part.vertices for part in parts] == [
            (0, 1, 2),
            (3, 4, 5),
            (6,),
        ]
        assert parts[1].edge_ids == (3, 4, 5)
        assert parts[1].graph.edges == ((0, 1), (1, 2), (0, 2))
        assert parts[2].graph.edge_count == 0

    def test_is_connected(self, triangle: Graph, two_triangles: Graph) -> None:
        """
        A triangle is connected, two triangles are not, and neither is the
        graph with no vertices.
        """
        assert is_connected(g=triangle)
        assert not is_connected(g=two_triangles)
        assert not is_connected(g=make_graph(vertex_count=0, edges=[]))
        assert is_connected(g=make_graph(vertex_count=1, edges=[]))


class TestConversions:
    """
    Tests for relabeling and converting graphs.
    """

    def test_relabel(self, diamond: Graph) -> None:
        """
        Relabeling keeps edge ids and degrees move with the vertices.
        """
        relabeled = relabel(g=diamond, permutation=[3, 2, 1, 0])
        assert relabeled.edges[4] == (3, 1)
        assert degrees(g=relabeled) == (2, 3, 2, 3)

    def test_networkx(self, diamond: Graph) -> None:
        """
        Converting to ``networkx`` and back keeps the edge set.
        """
        nx_graph = diamond.to_networkx()
        assert nx_graph.number_of_nodes() == 4
        assert edge_set(g=from_networkx(nx_graph=nx_graph)) == edge_set(
            g=diamond,
        )

    def test_json(self, diamond: Graph) -> None:
        """
        A graph is written as ``{"n": ..., "edges": ...}`` and read back
        with the same edge order.
        """
        document = graph_to_json(g=diamond)
        assert document == {
            'n': 4,
            'edges': [[0, 1], [1, 2], [2, 3], [3, 0], [0, 2]],
        }
        assert load_graph(text=json.dumps(document)) == diamond


class TestLoadGraph:
    """
    Tests for reading graphs from JSON text.
    """

    @pytest.mark.parametrize(
        'text',
        [
            pytest.param('{', id='not JSON'),
            pytest.param('[]', id='not an object'),
            pytest.param('{"n": 2}', id='no edges'),
            pytest.param('{"n": -1, "edges": []}', id='negative n'),
            pytest.param('{"n": 2, "edges": [[0]]}', id='short edge'),
            pytest.param('{"n": 2, "edges": [["0", 1]]}', id='string'),
            pytest.param('{"n": 2, "edges": 3}', id='edges not a list'),
            pytest.param('{"n": 2, "edges": {}}', id='edges an object'),
            pytest.param('{"n": true, "edges": []}', id='boolean n'),
            pytest.param(
                '{"n": 2, "edges": [[false, true]]}',
                id='boolean endpoints',
            ),
        ],
    )
    def test_malformed(self, text: str) -> None:
        """
        Documents of the wrong shape raise ``MalformedDocument``.
        """
        with pytest.raises(MalformedDocument):
            load_graph(text=text)

    def test_invalid_graph(self) -> None:
        """
        A well formed document which describes a loop raises ``SelfLoop``.
        """
        with pytest.raises(SelfLoop):
            load_graph(text='{"n": 2, "edges": [[1, 1]]}')
