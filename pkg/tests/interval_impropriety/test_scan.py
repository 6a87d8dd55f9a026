"""
Tests for exact scans of graph families.
"""

import csv
import io

import pytest
import timeout_decorator

from interval_impropriety._constants import Bound
from interval_impropriety.exact import SearchBudget
from interval_impropriety.exact.scan import (
    CSV_COLUMNS,
    PROVIDERS,
    ScanInstance,
    ScanReport,
    conjecture_scan,
    corona_instances,
    maximal_outerplanar_instances,
    multipartite_instances,
    small_connected_instances,
    small_corona_instances,
    small_factors,
    small_strong_product_instances,
    strong_product_bound,
    strong_product_instances,
    two_tree_instances,
    wheel_instances,
)
from interval_impropriety.families import complete, corona, cycle, path
from interval_impropriety.graph import Graph, max_degree


@timeout_decorator.timeout(seconds=300)
def _scan_wheels(high: int, budget: SearchBudget) -> ScanReport:
    """
    Scan wheels up to ``W_high`` against the bound 2, giving up after 300
    seconds.
    """
    return conjecture_scan(
        instances=wheel_instances(high=high),
        bound=Bound.TWO,
        budget=budget,
    )


class TestConjectureScan:
    """
    Tests for ``conjecture_scan``.
    """

    def test_wheels(self) -> None:
        """
        The wheels ``W_4`` to ``W_10`` have their known improprieties.
        """
        report = _scan_wheels(
            high=10,
            budget=SearchBudget(max_nodes=None, workers=2),
        )
        assert [row.instance_id for row in report.rows] == [
            'W4',
            'W5',
            'W6',
            'W7',
            'W8',
            'W9',
            'W10',
        ]
        assert [row.mu for row in report.rows] == [1, 2, 2, 1, 2, 2, 1]
        assert report.counterexamples() == []
        assert report.over_budget() == []

    def test_ground_truths(self, budget: SearchBudget) -> None:
        """
        ``K_5`` and ``C_3 ⊙ P_2`` both have impropriety 2.
        """
        corona_graph, _ = corona(g=cycle(n=3), h=path(n=2))
        instances = [
            ScanInstance(
                family='complete',
                instance_id='K5',
                graph=complete(n=5),
                expected=2,
            ),
            ScanInstance(
                family='corona',
                instance_id='C3oP2',
                graph=corona_graph,
                expected=2,
            ),
        ]
        report = conjecture_scan(
            instances=instances,
            bound=Bound.TWO,
            budget=budget,
        )
        assert [row.mu for row in report.rows] == [2, 2]
        assert report.counterexamples() == []

    def test_counterexample(self, budget: SearchBudget) -> None:
        """
        An instance above its bound is reported as a counterexample.
        """
        instance = ScanInstance(
            family='cycle',
            instance_id='C5',
            graph=cycle(n=5),
            bound=1,
        )
        report = conjecture_scan(
            instances=[instance],
            bound=None,
            budget=budget,
        )
        (row,) = report.counterexamples()
        assert row.mu == 2
        assert row.ok is False

    def test_expected_value(self, budget: SearchBudget) -> None:
        """
        An instance whose value differs from the expected one is reported.
        """
        instance = ScanInstance(
            family='cycle',
            instance_id='C4',
            graph=cycle(n=4),
            expected=2,
        )
        report = conjecture_scan(
            instances=[instance],
            bound=Bound.DELTA,
            budget=budget,
        )
        assert len(report.counterexamples()) == 1

    def test_over_budget(self) -> None:
        """
        Instances over budget are reported without a value.
        """
        instance = ScanInstance(
            family='complete',
            instance_id='K5',
            graph=complete(n=5),
        )
        report = conjecture_scan(
            instances=[instance],
            bound=Bound.DELTA,
            budget=SearchBudget(max_nodes=1),
        )
        (row,) = report.over_budget()
        assert row.mu is None
        assert row.ok is None
        assert report.counterexamples() == []

    def test_no_bound(self, budget: SearchBudget) -> None:
        """
        Every instance needs a bound.
        """
        instance = ScanInstance(
            family='path',
            instance_id='P3',
            graph=path(n=3),
        )
        with pytest.raises(ValueError):
            conjecture_scan(instances=[instance], bound=None, budget=budget)

    def test_csv(self, budget: SearchBudget) -> None:
        """
        Rows are written as CSV with a header.
        """
        report = _scan_wheels(high=5, budget=budget)
        rows = list(csv.reader(io.StringIO(report.to_csv())))
        assert tuple(rows[0]) == CSV_COLUMNS
        assert rows[1][:8] == ['wheel', 'W4', '4', '6', '3', '1', '2', 'true']
        assert rows[2][:8] == ['wheel', 'W5', '5', '8', '4', '2', '2', 'true']
        assert len(rows) == 3

    def test_summary(self, budget: SearchBudget) -> None:
        """
        The summary has one line per family.
        """
        report = _scan_wheels(high=5, budget=budget)
        lines = report.summary().splitlines()
        assert lines[1] == 'wheel 2 2 0 0'


class TestProviders:
    """
    Tests for the families of instances.
    """

    def test_two_trees(self) -> None:
        """
        There are 1, 1, 2 and 5 2-trees on 3 to 6 vertices.
        """
        assert len(list(two_tree_instances(max_n=6))) == 9

    def test_maximal_outerplanar(self) -> None:
        """
        Deletions are reported in their own family.
        """
        instances = list(maximal_outerplanar_instances(max_n=6, deletions=2))
        families = [instance.family for instance in instances]
        assert families.count('maximal_outerplanar') == 6
        assert families.count('outerplanar') == 12

    def test_connected(self) -> None:
        """
        There are 1, 2 and 6 connected graphs on 2, 3 and 4 vertices.
        """
        assert len(list(small_connected_instances(max_n=4))) == 9

    def test_bounded_degree(self) -> None:
        """
        Instances above the degree limit are left out.
        """
        instances = small_connected_instances(max_n=5, max_delta=2)
        for instance in instances:
            assert max_degree(g=instance.graph) <= 2

    def test_multipartite(self) -> None:
        """
        Complete multipartite graphs have at least two parts.
        """
        names = [
            instance.instance_id
            for instance in multipartite_instances(max_vertices=4)
        ]
        assert names == [
            'K1,1',
            'K2,1',
            'K1,1,1',
            'K3,1',
            'K2,2',
            'K2,1,1',
            'K1,1,1,1',
        ]

    def test_factors(self) -> None:
        """
        Small factors are named after their family and size.
        """
        names = [name for name, _ in small_factors(max_n=4)]
        assert names == ['K1', 'P2', 'P3', 'C3', 'P4', 'C4', 'K4']

    def test_coronas(self) -> None:
        """
        Coronas of small factors are bounded by ``max(mu(G), mu(H) + 1)``.
        """
        instances = {
            instance.instance_id: instance
            for instance in small_corona_instances(max_n=9)
        }
        assert instances['C3oP2'].graph.vertex_count == 9
        assert instances['C3oP2'].bound == 2
        assert instances['K1oC4'].bound == 2
        for instance in instances.values():
            assert instance.family == 'corona'
            assert instance.graph.vertex_count <= 9

    def test_strong_products(self) -> None:
        """
        Each unordered pair of factors gives one strong product.
        """
        (instance,) = small_strong_product_instances(max_n=4)
        assert instance.instance_id == 'P2xP2'
        assert instance.bound == 3

    def test_registry(self) -> None:
        """
        Every provider takes the largest number of vertices.
        """
        assert set(PROVIDERS) == {
            'two_tree',
            'maximal_outerplanar',
            'outerplanar',
            'connected',
            'delta_at_most_5',
            'wheel',
            'complete_multipartite',
            'corona',
            'strong_product',
        }
        assert len(list(PROVIDERS['wheel'](6))) == 3


class TestProducts:
    """
    Tests for scans of products.
    """

    @pytest.mark.parametrize(
        'mu_g, mu_h, delta_g, delta_h, bound',
        [(1, 1, 1, 1, 3), (2, 1, 2, 1, 6), (1, 2, 3, 2, 10)],
    )
    def test_strong_product_bound(
        self,
        mu_g: int,
        mu_h: int,
        delta_g: int,
        delta_h: int,
        bound: int,
    ) -> None:
        """
        The bound is ``max(mu_g, mu_h) + delta_g mu_h + delta_h mu_g``.
        """
        assert (
            strong_product_bound(
                mu_g=mu_g,
                mu_h=mu_h,
                delta_g=delta_g,
                delta_h=delta_h,
            )
            == bound
        )

    def test_strong_products(self, budget: SearchBudget) -> None:
        """
        Strong products of small graphs stay within the bound.
        """
        pairs = [
            (('P2', path(n=2)), ('P2', path(n=2))),
            (('P3', path(n=3)), ('P2', path(n=2))),
        ]
        instances = list(strong_product_instances(pairs=pairs, budget=budget))
        assert [instance.bound for instance in instances] == [3, 4]
        report = conjecture_scan(
            instances=instances,
            bound=None,
            budget=budget,
        )
        assert report.counterexamples() == []

    def test_coronas(self, budget: SearchBudget) -> None:
        """
        Corona products are bounded by ``max(mu(G), mu(H) + 1)``.
        """
        pairs = [(('P2', path(n=2)), ('K3', complete(n=3)))]
        (instance,) = corona_instances(pairs=pairs, budget=budget)
        graph: Graph = instance.graph
        assert graph.vertex_count == 8
        assert instance.bound == 3
        report = conjecture_scan(
            instances=[instance],
            bound=None,
            budget=budget,
        )
        assert report.counterexamples() == []
