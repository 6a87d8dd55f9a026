"""
Tests for family generators, products and enumerators.
"""

from typing import Any, Dict, List, Tuple

import networkx as nx
import pytest
from _pytest.logging import LogCaptureFixture

from interval_impropriety._constants import FamilyKind
from interval_impropriety.families import (
    CaterpillarLabels,
    FamilyRecipe,
    SpiderLabels,
    TwoPathSequence,
    alternating_multipartite,
    caterpillar,
    corona,
    cycle,
    enumerate_maximal_outerplanar,
    enumerate_two_trees,
    example_two_path,
    fan,
    generate,
    iterated_triangulation,
    make_two_path,
    path,
    random_maximal_outerplanar,
    random_tree,
    recipe_to_json,
    recover_two_tree_trace,
    replay_two_tree,
    spider,
    square_of_path,
    strong_product,
    trace_to_json,
    two_path_graph,
)
from interval_impropriety.families.exceptions import (
    InvalidRecipe,
    InvalidTrace,
    UnsupportedSize,
)
from interval_impropriety.graph import (
    edge_set,
    is_connected,
    make_graph,
    max_degree,
)


class TestClassicFamilies:
    """
    Tests for paths, cycles, stars, spiders, caterpillars and trees.
    """

    def test_cycle(self) -> None:
        """
        The closing edge comes last.
        """
        graph = cycle(n=5)
        assert graph.edges[-1] == (4, 0)
        assert graph.edge_count == 5

    def test_spider(self) -> None:
        """
        Legs are numbered outwards from the center, one leg after another.
        """
        graph, labels = spider(legs=[2, 1, 3])
        assert graph.vertex_count == 7
        assert graph.edge_count == 6
        assert labels == SpiderLabels(center=0, legs=((1, 2), (3,), (4, 5, 6)))

    def test_caterpillar(self) -> None:
        """
        Leaves are numbered after the spine.
        """
        graph, labels = caterpillar(leaves=[1, 0, 2])
        assert graph.vertex_count == 6
        assert labels == CaterpillarLabels(
            spine=(0, 1, 2),
            leaves=((3,), (), (4, 5)),
        )

    @pytest.mark.parametrize('seed', [0, 1, 2])
    def test_random_tree(self, seed: int) -> None:
        """
        Random trees are connected with one edge fewer than vertices.
        """
        graph = random_tree(n=9, seed=seed)
        assert graph.edge_count == 8
        assert is_connected(g=graph)
        assert random_tree(n=9, seed=seed) == graph

    def test_alternating_multipartite(self) -> None:
        """
        Parts alternate between ``A`` and ``B`` and vertices are named after
        their part.
        """
        graph, labels = alternating_multipartite(s=2, t=1, parts=4)
        assert labels.parts == ((0, 1), (2,), (3, 4), (5,))
        names = [labels.name(vertex) for vertex in range(graph.vertex_count)]
        assert names == ['x1,1', 'x1,2', 'y1,1', 'x2,1', 'x2,2', 'y2,1']
        assert graph.edge_count == 13


class TestGenerate:
    """
    Tests for generating graphs from recipes.
    """

    def test_wheel(self) -> None:
        """
        ``W_n`` has a hub of degree ``n - 1`` and a rim cycle.
        """
        recipe = FamilyRecipe(kind=FamilyKind.WHEEL, params={'n': 6})
        graph, _ = generate(recipe=recipe)
        assert graph.vertex_count == 6
        assert graph.edge_count == 10
        assert graph.degree(0) == 5
        assert nx.is_isomorphic(graph.to_networkx(), nx.wheel_graph(6))

    def test_complete_multipartite_parts(self) -> None:
        """
        Arbitrary part sizes give a graph without labels.
        """
        recipe = FamilyRecipe(
            kind=FamilyKind.COMPLETE_MULTIPARTITE,
            params={'parts': [1, 2, 3]},
        )
        graph, trace = generate(recipe=recipe)
        assert graph.vertex_count == 6
        assert graph.edge_count == 11
        assert trace is None

    def test_complete_multipartite_ell(self) -> None:
        """
        ``ell`` gives ``2 ** ell`` parts.
        """
        recipe = FamilyRecipe(
            kind=FamilyKind.COMPLETE_MULTIPARTITE,
            params={'s': 1, 't': 2, 'ell': 2},
        )
        graph, labels = generate(recipe=recipe)
        assert graph.vertex_count == 6
        assert labels is not None

    @pytest.mark.parametrize(
        'kind, params',
        [
            pytest.param(FamilyKind.CYCLE, {'n': 2}, id='short cycle'),
            pytest.param(FamilyKind.PATH, {}, id='missing n'),
            pytest.param(FamilyKind.PATH, {'n': True}, id='boolean n'),
            pytest.param(FamilyKind.SPIDER, {'legs': [1, 1]}, id='two legs'),
            pytest.param(
                FamilyKind.COMPLETE_MULTIPARTITE,
                {'s': 1, 't': 1, 'm': 3},
                id='odd parts',
            ),
            pytest.param(FamilyKind.WHEEL, {'n': 3}, id='small wheel'),
            pytest.param(FamilyKind.CORONA, {'g': 3}, id='not a recipe'),
            pytest.param(
                FamilyKind.TWO_PATH,
                {'edges': [[0, 1], [2, 3]]},
                id='disjoint edges',
            ),
        ],
    )
    def test_invalid(
        self,
        kind: FamilyKind,
        params: Dict[str, Any],
    ) -> None:
        """
        Parameters which do not fit the family raise ``InvalidRecipe``.
        """
        with pytest.raises(InvalidRecipe):
            generate(recipe=FamilyRecipe(kind=kind, params=params))

    def test_recipe_to_json(self) -> None:
        """
        Nested recipes are written as nested documents.
        """
        recipe = FamilyRecipe(
            kind=FamilyKind.CORONA,
            params={
                'g': FamilyRecipe(kind=FamilyKind.PATH, params={'n': 3}),
                'h': FamilyRecipe(kind=FamilyKind.CYCLE, params={'n': 4}),
            },
        )
        assert recipe_to_json(recipe=recipe) == {
            'kind': 'corona',
            'params': {
                'g': {'kind': 'path', 'params': {'n': 3}},
                'h': {'kind': 'cycle', 'params': {'n': 4}},
            },
        }

    def test_trace_to_json(self) -> None:
        """
        Traces are written with their type.
        """
        _, labels = spider(legs=[1, 1, 1])
        assert trace_to_json(trace=labels) == {
            'center': 0,
            'legs': ((1,), (2,), (3,)),
            'type': 'SpiderLabels',
        }
        assert trace_to_json(trace=None) is None


class TestProducts:
    """
    Tests for corona and strong products.
    """

    def test_corona(self) -> None:
        """
        ``G ⊙ H`` has ``|V(G)| (1 + |V(H)|)`` vertices and its edges are
        ``G``'s, then each copy followed by its attachment edges.
        """
        graph, layout = corona(g=cycle(n=3), h=path(n=2))
        assert graph.vertex_count == 9
        assert graph.edge_count == 3 + 3 * (1 + 2)
        assert layout.copies == ((3, 4), (5, 6), (7, 8))
        assert layout.copy_edges == ((3,), (6,), (9,))
        assert layout.attachment_edges == ((4, 5), (7, 8), (10, 11))
        assert graph.edges[4] == (0, 3)

    def test_corona_needs_vertices(self) -> None:
        """
        ``G`` must have a vertex.
        """
        with pytest.raises(InvalidRecipe):
            corona(g=path(n=0), h=path(n=2))

    @pytest.mark.parametrize(
        'g_order, h_order, edge_count',
        [
            pytest.param(2, 2, 6, id='K4'),
            pytest.param(3, 2, 11, id='P3 P2'),
            pytest.param(3, 3, 20, id='P3 P3'),
        ],
    )
    def test_strong_product(
        self,
        g_order: int,
        h_order: int,
        edge_count: int,
    ) -> None:
        """
        The strong product of paths has the expected number of edges and
        agrees with ``networkx``.
        """
        g = path(n=g_order)
        h = path(n=h_order)
        product = strong_product(g=g, h=h)
        assert product.vertex_count == g_order * h_order
        assert product.edge_count == edge_count
        expected = nx.strong_product(g.to_networkx(), h.to_networkx())
        assert nx.is_isomorphic(product.to_networkx(), expected)

    def test_large_strong_product_warns(
        self,
        caplog: LogCaptureFixture,
    ) -> None:
        """
        A product beyond the exact solver's reach is logged as a warning.
        """
        strong_product(g=path(n=4), h=path(n=4))
        assert 'beyond what the exact solver is meant for' in caplog.text


class TestTwoTrees:
    """
    Tests for 2-trees and squares of paths.
    """

    @pytest.mark.parametrize(
        'n, count',
        [(3, 1), (4, 1), (5, 2), (6, 5), (7, 12), (8, 39)],
    )
    def test_enumerate(self, n: int, count: int) -> None:
        """
        The number of 2-trees up to isomorphism is as known.
        """
        two_trees = enumerate_two_trees(n=n)
        assert len(two_trees) == count
        for graph, trace in two_trees:
            assert graph.edge_count == 2 * n - 3
            assert replay_two_tree(trace=trace) == graph

    @pytest.mark.parametrize('n', [2, 11])
    def test_enumerate_unsupported(self, n: int) -> None:
        """
        Only ``3 <= n <= 10`` is supported.
        """
        with pytest.raises(UnsupportedSize):
            enumerate_two_trees(n=n)

    def test_square_of_path(self) -> None:
        """
        The square of a path joins vertices at distance at most 2.
        """
        graph, trace = square_of_path(n=6)
        assert trace is not None
        expected = nx.power(nx.path_graph(6), 2)
        assert edge_set(g=graph) == frozenset(
            frozenset(edge) for edge in expected.edges()
        )

    def test_recover_trace(self) -> None:
        """
        A trace recovered from a 2-tree builds the same edge set.
        """
        graph, _ = enumerate_two_trees(n=7)[5]
        trace = recover_two_tree_trace(g=graph)
        assert edge_set(g=replay_two_tree(trace=trace)) == edge_set(g=graph)

    def test_recover_trace_not_two_tree(self) -> None:
        """
        A graph which is not a 2-tree has no trace.
        """
        k4_with_pendant = make_graph(
            vertex_count=5,
            edges=[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)],
        )
        with pytest.raises(InvalidTrace):
            recover_two_tree_trace(g=cycle(n=4))
        with pytest.raises(InvalidTrace):
            recover_two_tree_trace(g=k4_with_pendant)


class TestTwoPaths:
    """
    Tests for 2-paths and fans.
    """

    def test_example(self) -> None:
        """
        The fixed example has 12 triangles on 14 vertices.
        """
        sequence = example_two_path()
        graph = two_path_graph(sequence=sequence)
        assert len(sequence.triangles) == 12
        assert graph.vertex_count == 14
        assert graph.edge_count == 25

    def test_fan(self) -> None:
        """
        The listed edges of a fan all contain the hub.
        """
        sequence = fan(n=5)
        graph = two_path_graph(sequence=sequence)
        assert sequence.edges == ((0, 1), (0, 2), (0, 3), (0, 4))
        assert graph.edges[4:] == ((1, 2), (2, 3), (3, 4))
        assert max_degree(g=graph) == 4

    def test_generate_example(self) -> None:
        """
        The example is generated by a recipe.
        """
        recipe = FamilyRecipe(
            kind=FamilyKind.TWO_PATH,
            params={'example': True},
        )
        graph, sequence = generate(recipe=recipe)
        assert isinstance(sequence, TwoPathSequence)
        assert graph.edge_count == 25

    @pytest.mark.parametrize(
        'edges',
        [
            pytest.param([(0, 1)], id='single edge'),
            pytest.param([(0, 1), (2, 3)], id='disjoint'),
            pytest.param([(0, 1), (1, 0)], id='repeated'),
            pytest.param([(0, 1), (1, 2), (0, 2)], id='vertex comes back'),
            pytest.param([(0, 1), (1, 5)], id='gap in numbering'),
        ],
    )
    def test_invalid(self, edges: List[Tuple[int, int]]) -> None:
        """
        Sequences which are not 2-paths raise ``InvalidTrace``.
        """
        with pytest.raises(InvalidTrace):
            make_two_path(edges=edges)


class TestOuterplanar:
    """
    Tests for maximal outerplanar graphs.
    """

    @pytest.mark.parametrize(
        'n, count',
        [(3, 1), (4, 1), (5, 1), (6, 3), (7, 4), (8, 12), (9, 27)],
    )
    def test_enumerate(self, n: int, count: int) -> None:
        """
        The number of maximal outerplanar graphs up to isomorphism is as
        known.
        """
        graphs = enumerate_maximal_outerplanar(n=n)
        assert len(graphs) == count
        for graph, polygon in graphs:
            assert graph.edge_count == 2 * n - 3
            assert len(polygon.diagonals) == n - 3

    def test_enumerate_unsupported(self) -> None:
        """
        Only ``3 <= n <= 12`` is supported.
        """
        with pytest.raises(UnsupportedSize):
            enumerate_maximal_outerplanar(n=13)

    @pytest.mark.parametrize('seed', range(5))
    def test_random(self, seed: int) -> None:
        """
        Random triangulated polygons are outerplanar 2-trees.
        """
        graph, polygon = random_maximal_outerplanar(n=15, seed=seed)
        assert graph.edge_count == 27
        assert polygon.outer_cycle == tuple(range(15))
        assert replay_two_tree(trace=polygon.trace).edge_count == 27


class TestIteratedTriangulations:
    """
    Tests for iterated triangulations.
    """

    @pytest.mark.parametrize(
        'n, vertex_count, edge_count, delta',
        [
            (0, 3, 3, 2),
            (1, 4, 6, 3),
            (2, 7, 15, 6),
            (3, 16, 42, 12),
        ],
    )
    def test_sizes(
        self,
        n: int,
        vertex_count: int,
        edge_count: int,
        delta: int,
    ) -> None:
        """
        Each level adds one vertex and three edges per inner face.
        """
        graph, trace = iterated_triangulation(n=n)
        assert graph.vertex_count == vertex_count
        assert graph.edge_count == edge_count
        assert max_degree(g=graph) == delta
        assert len(trace.levels) == n
        assert nx.check_planarity(graph.to_networkx())[0]
