"""
Exact scans of graph families against an upper bound on the impropriety.
"""

import csv
import io
import logging
import random
import time
from dataclasses import dataclass
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

import networkx as nx

from interval_impropriety._constants import (
    SOLVER_EDGE_LIMIT,
    Bound,
)
from interval_impropriety.families import (
    complete,
    complete_multipartite,
    corona,
    cycle,
    enumerate_maximal_outerplanar,
    enumerate_two_trees,
    path,
    strong_product,
)
from interval_impropriety.graph import (
    Graph,
    from_networkx,
    is_connected,
    make_graph,
    max_degree,
)

from ._search import SearchBudget, exact_impropriety
from .exceptions import BudgetExceeded

LOGGER = logging.getLogger(__name__)

CSV_COLUMNS = (
    'family',
    'instance_id',
    'n',
    'm',
    'delta',
    'mu',
    'bound',
    'ok',
    'nodes',
    'ms',
)

# Wheels W_n with impropriety 1. Every other wheel has impropriety 2.
INTERVAL_COLORABLE_WHEELS = frozenset({4, 7, 10})


@dataclass(frozen=True)
class ScanInstance:
    """
    One graph to scan.

    Args:
        family: The family name for the report.
        instance_id: A name unique within the family.
        graph: The graph.
        bound: A bound for this instance. When ``None`` the bound given to
            the scan is used.
        expected: The impropriety the instance is known to have, if any.
    """

    family: str
    instance_id: str
    graph: Graph
    bound: Optional[int] = None
    expected: Optional[int] = None


@dataclass(frozen=True)
class ScanRow:
    """
    The result for one instance. ``mu`` and ``ok`` are ``None`` when the
    budget ran out.
    """

    family: str
    instance_id: str
    n: int
    m: int
    delta: int
    mu: Optional[int]
    bound: int
    ok: Optional[bool]
    nodes: int
    ms: int


@dataclass(frozen=True)
class ScanReport:
    """
    The rows of a scan, in instance order.
    """

    rows: Tuple[ScanRow, ...]

    def counterexamples(self) -> List[ScanRow]:
        """
        Return the rows which break the bound or the expected value.
        """
        return [row for row in self.rows if row.ok is False]

    def over_budget(self) -> List[ScanRow]:
        """
        Return the rows for which the budget ran out.
        """
        return [row for row in self.rows if row.mu is None]

    def to_csv(self) -> str:
        """
        Return the rows as CSV with a header line.
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        for row in self.rows:
            writer.writerow(
                [
                    row.family,
                    row.instance_id,
                    row.n,
                    row.m,
                    row.delta,
                    '' if row.mu is None else row.mu,
                    row.bound,
                    '' if row.ok is None else str(row.ok).lower(),
                    row.nodes,
                    row.ms,
                ],
            )
        return buffer.getvalue()

    def summary(self) -> str:
        """
        Return one line per family: instances, largest impropriety,
        violations and instances over budget.
        """
        families: Dict[str, List[ScanRow]] = {}
        for row in self.rows:
            families.setdefault(row.family, []).append(row)

        lines = ['family instances max_mu violations over_budget']
        for name, rows in families.items():
            values = [row.mu for row in rows if row.mu is not None]
            lines.append(
                ' '.join(
                    [
                        name,
                        str(len(rows)),
                        str(max(values)) if values else '-',
                        str(sum(row.ok is False for row in rows)),
                        str(sum(row.mu is None for row in rows)),
                    ],
                ),
            )
        return '\n'.join(lines)


def conjecture_scan(
    instances: Iterable[ScanInstance],
    bound: Optional[Bound],
    budget: SearchBudget,
) -> ScanReport:
    """
    Compute the exact impropriety of every instance and compare it with a
    bound.

    Args:
        instances: The graphs to scan.
        bound: A bound as a function of the maximum degree, used for
            instances without their own bound.
        budget: The budget for each instance. Instances over budget are
            reported with no value rather than failing the scan.

    Raises:
        ValueError: An instance has no bound and no bound is given.
    """
    rows = []
    for instance in instances:
        graph = instance.graph
        delta = max_degree(g=graph)
        if instance.bound is not None:
            limit = instance.bound
        elif bound is not None:
            limit = bound.evaluate(delta=delta)
        else:
            raise ValueError(
                f'{instance.family} {instance.instance_id} has no bound.',
            )

        start = time.monotonic()
        mu: Optional[int]
        ok: Optional[bool]
        try:
            outcome = exact_impropriety(g=graph, budget=budget)
        except BudgetExceeded as exc:
            mu = None
            ok = None
            nodes = exc.nodes
        else:
            mu = outcome.impropriety
            nodes = outcome.stats.nodes
            ok = mu <= limit and instance.expected in (None, mu)
        milliseconds = int((time.monotonic() - start) * 1000)

        row = ScanRow(
            family=instance.family,
            instance_id=instance.instance_id,
            n=graph.vertex_count,
            m=graph.edge_count,
            delta=delta,
            mu=mu,
            bound=limit,
            ok=ok,
            nodes=nodes,
            ms=milliseconds,
        )
        LOGGER.info(
            '%s %s: mu = %s, bound = %d, ok = %s',
            row.family,
            row.instance_id,
            row.mu,
            row.bound,
            row.ok,
        )
        if row.ok is False:
            LOGGER.warning(
                'Counterexample: %s %s has impropriety %s above %d.',
                row.family,
                row.instance_id,
                row.mu,
                row.bound,
            )
        rows.append(row)
    return ScanReport(rows=tuple(rows))


def two_tree_instances(max_n: int) -> Iterator[ScanInstance]:
    """
    Yield every 2-tree on 3 to ``max_n`` vertices, up to isomorphism.
    """
    for n in range(3, max_n + 1):
        for index, (graph, _) in enumerate(enumerate_two_trees(n=n)):
            yield ScanInstance(
                family='two_tree',
                instance_id=f'n{n}-{index}',
                graph=graph,
            )


def maximal_outerplanar_instances(
    max_n: int,
    deletions: int = 0,
    seed: int = 0,
) -> Iterator[ScanInstance]:
    """
    Yield every maximal outerplanar graph on 3 to ``max_n`` vertices, up to
    isomorphism, each followed by ``deletions`` copies with one random edge
    removed. Removing edges keeps a graph outerplanar.
    """
    rng = random.Random(seed)
    for n in range(3, max_n + 1):
        for index, (graph, _) in enumerate(
            enumerate_maximal_outerplanar(n=n),
        ):
            instance_id = f'n{n}-{index}'
            yield ScanInstance(
                family='maximal_outerplanar',
                instance_id=instance_id,
                graph=graph,
            )
            for deletion in range(deletions):
                removed = rng.randrange(graph.edge_count)
                kept = [
                    edge
                    for edge_id, edge in enumerate(graph.edges)
                    if edge_id != removed
                ]
                yield ScanInstance(
                    family='outerplanar',
                    instance_id=f'{instance_id}-d{deletion}',
                    graph=make_graph(vertex_count=n, edges=kept),
                )


def small_connected_instances(
    max_n: int,
    max_delta: Optional[int] = None,
) -> Iterator[ScanInstance]:
    """
    Yield every connected graph with an edge on at most ``max_n`` vertices,
    up to isomorphism, optionally only those with maximum degree at most
    ``max_delta``.

    ``max_n`` can be at most 7.
    """
    for index, atlas_graph in enumerate(nx.graph_atlas_g()):
        size = atlas_graph.number_of_nodes()
        if size > max_n or atlas_graph.number_of_edges() == 0:
            continue
        graph = from_networkx(nx_graph=atlas_graph)
        if not is_connected(g=graph):
            continue
        if max_delta is not None and max_degree(g=graph) > max_delta:
            continue
        yield ScanInstance(
            family='connected',
            instance_id=f'atlas{index}',
            graph=graph,
        )


def wheel_instances(low: int = 4, high: int = 10) -> Iterator[ScanInstance]:
    """
    Yield the wheels ``W_low, ..., W_high`` with their known impropriety.
    """
    for n in range(low, high + 1):
        graph, _ = corona(g=complete(n=1), h=cycle(n=n - 1))
        yield ScanInstance(
            family='wheel',
            instance_id=f'W{n}',
            graph=graph,
            expected=1 if n in INTERVAL_COLORABLE_WHEELS else 2,
        )


def _part_sizes(total: int, largest: int) -> Iterator[List[int]]:
    """
    Yield the nonincreasing lists of positive integers at most ``largest``
    summing to ``total``.
    """
    if total == 0:
        yield []
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _part_sizes(total=total - first, largest=first):
            yield [first] + rest


def multipartite_instances(max_vertices: int) -> Iterator[ScanInstance]:
    """
    Yield every complete multipartite graph with at least two parts, at
    most ``max_vertices`` vertices and at most as many edges as the exact
    solver is meant for.
    """
    for total in range(2, max_vertices + 1):
        for sizes in _part_sizes(total=total, largest=total):
            if len(sizes) < 2:
                continue
            graph = complete_multipartite(part_sizes=sizes)
            if graph.edge_count > SOLVER_EDGE_LIMIT:
                continue
            yield ScanInstance(
                family='complete_multipartite',
                instance_id='K' + ','.join(str(size) for size in sizes),
                graph=graph,
            )


def strong_product_bound(
    mu_g: int,
    mu_h: int,
    delta_g: int,
    delta_h: int,
) -> int:
    """
    Return ``max(mu_g, mu_h) + delta_g * mu_h + delta_h * mu_g``, an upper
    bound on the impropriety of ``G ⊠ H``.
    """
    return max(mu_g, mu_h) + delta_g * mu_h + delta_h * mu_g


NamedGraph = Tuple[str, Graph]


def _impropriety(g: Graph, budget: SearchBudget) -> int:
    return exact_impropriety(g=g, budget=budget).impropriety


def strong_product_instances(
    pairs: Sequence[Tuple[NamedGraph, NamedGraph]],
    budget: SearchBudget,
) -> Iterator[ScanInstance]:
    """
    Yield ``G ⊠ H`` for each pair, bounded by :func:`strong_product_bound`
    computed from the exact improprieties of ``G`` and ``H``.
    """
    for (g_name, g), (h_name, h) in pairs:
        yield ScanInstance(
            family='strong_product',
            instance_id=f'{g_name}x{h_name}',
            graph=strong_product(g=g, h=h),
            bound=strong_product_bound(
                mu_g=_impropriety(g=g, budget=budget),
                mu_h=_impropriety(g=h, budget=budget),
                delta_g=max_degree(g=g),
                delta_h=max_degree(g=h),
            ),
        )


def corona_instances(
    pairs: Sequence[Tuple[NamedGraph, NamedGraph]],
    budget: SearchBudget,
) -> Iterator[ScanInstance]:
    """
    Yield ``G ⊙ H`` for each pair, bounded by
    ``max(mu(G), mu(H) + 1)``, to look for answers to whether that bound
    always holds.
    """
    for (g_name, g), (h_name, h) in pairs:
        graph, _ = corona(g=g, h=h)
        mu_h = _impropriety(g=h, budget=budget)
        yield ScanInstance(
            family='corona',
            instance_id=f'{g_name}o{h_name}',
            graph=graph,
            bound=max(_impropriety(g=g, budget=budget), mu_h + 1),
        )


def small_factors(max_n: int) -> List[NamedGraph]:
    """
    Return the paths, cycles and complete graphs on 1 to ``max_n``
    vertices, each graph once, named ``K1``, ``P2``, ``C3``, ``P3``, ``P4``,
    ``C4``, ``K4`` and so on.
    """
    factors: List[NamedGraph] = [('K1', complete(n=1))]
    for n in range(2, max_n + 1):
        factors.append((f'P{n}', path(n=n)))
        if n >= 3:
            factors.append((f'C{n}', cycle(n=n)))
        if n >= 4:
            factors.append((f'K{n}', complete(n=n)))
    return factors


def small_corona_instances(max_n: int) -> Iterator[ScanInstance]:
    """
    Yield ``G ⊙ H`` for every pair of :func:`small_factors` whose corona has
    at most ``max_n`` vertices and at most as many edges as the exact solver
    is meant for.
    """
    factors = small_factors(max_n=max_n)
    pairs: List[Tuple[NamedGraph, NamedGraph]] = []
    for g_name, g in factors:
        for h_name, h in factors:
            size = g.vertex_count * (1 + h.vertex_count)
            edges = g.edge_count + g.vertex_count * (
                h.edge_count + h.vertex_count
            )
            if size <= max_n and edges <= SOLVER_EDGE_LIMIT:
                pairs.append(((g_name, g), (h_name, h)))
    return corona_instances(pairs=pairs, budget=SearchBudget())


def small_strong_product_instances(max_n: int) -> Iterator[ScanInstance]:
    """
    Yield ``G ⊠ H`` for every unordered pair of :func:`small_factors` with
    at least two vertices each, whose product has at most ``max_n``
    vertices and at most as many edges as the exact solver is meant for.
    """
    factors = [
        factor
        for factor in small_factors(max_n=max_n)
        if factor[1].vertex_count >= 2
    ]
    pairs: List[Tuple[NamedGraph, NamedGraph]] = []
    for index, (g_name, g) in enumerate(factors):
        for h_name, h in factors[index:]:
            size = g.vertex_count * h.vertex_count
            edges = (
                g.vertex_count * h.edge_count
                + h.vertex_count * g.edge_count
                + 2 * g.edge_count * h.edge_count
            )
            if size <= max_n and edges <= SOLVER_EDGE_LIMIT:
                pairs.append(((g_name, g), (h_name, h)))
    return strong_product_instances(pairs=pairs, budget=SearchBudget())


InstanceProvider = Callable[[int], Iterator[ScanInstance]]

PROVIDERS: Dict[str, InstanceProvider] = {
    'two_tree': two_tree_instances,
    'maximal_outerplanar': maximal_outerplanar_instances,
    'outerplanar': lambda max_n: maximal_outerplanar_instances(
        max_n=max_n,
        deletions=2,
    ),
    'connected': small_connected_instances,
    'delta_at_most_5': lambda max_n: small_connected_instances(
        max_n=max_n,
        max_delta=5,
    ),
    'wheel': lambda max_n: wheel_instances(high=max_n),
    'complete_multipartite': multipartite_instances,
    'corona': small_corona_instances,
    'strong_product': small_strong_product_instances,
}
