"""
Exhaustive search for k-improper interval colorings.
"""

import logging
import multiprocessing
import os
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from interval_impropriety._constants import THREADS_ENV_VAR, SearchStatus
from interval_impropriety.coloring import (
    EdgeColoring,
    make_coloring,
    normalize,
    verify,
)
from interval_impropriety.graph import (
    Graph,
    components,
    is_connected,
    max_degree,
)

from .exceptions import (
    BudgetExceeded,
    DisconnectedGraph,
    InvalidBudget,
    InvalidImpropriety,
    UnsoundWitness,
)

LOGGER = logging.getLogger(__name__)

# How many nodes to expand between checks of the clock and the cancel flag.
_CHECK_INTERVAL = 1024


def worker_count() -> int:
    """
    Return the number of worker processes set by ``IMPROPRIETY_THREADS``.

    The default is 1. A value which is not a positive integer is logged and
    ignored.
    """
    value = os.environ.get(THREADS_ENV_VAR)
    if value is None:
        return 1
    try:
        workers = int(value)
    except ValueError:
        workers = 0
    if workers < 1:
        LOGGER.warning(
            'Ignoring %s=%r, which is not a positive integer.',
            THREADS_ENV_VAR,
            value,
        )
        return 1
    return workers


@dataclass(frozen=True)
class SearchBudget:
    """
    Limits and switches for a search.

    Args:
        max_nodes: The largest number of search nodes to expand, or ``None``
            for no limit.
        time_limit: The largest number of seconds to search for, or
            ``None`` for no limit.
        window: Colors are searched in ``[-window, window]``. ``None`` means
            ``1 + sum(d(v) - 1)``, which no normalized coloring needs to
            leave.
        symmetry_breaking: Whether to fix the first edge to color 0 and the
            second edge to a nonnegative color.
        workers: The number of worker processes. ``None`` reads
            ``IMPROPRIETY_THREADS``.

    Raises:
        InvalidBudget: A limit is not positive.
    """

    max_nodes: Optional[int] = 10_000_000
    time_limit: Optional[float] = None
    window: Optional[int] = None
    symmetry_breaking: bool = True
    workers: Optional[int] = None

    def __post_init__(self) -> None:
        """
        Check that every limit is positive.
        """
        limits = {
            'max_nodes': self.max_nodes,
            'time_limit': self.time_limit,
            'window': self.window,
            'workers': self.workers,
        }
        for name, value in limits.items():
            if value is not None and value <= 0:
                raise InvalidBudget(f'{name} must be positive, got {value}.')


@dataclass(frozen=True)
class Decision:
    """
    The answer to "is there a k-improper interval coloring?".

    Args:
        status: ``FOUND``, ``EXHAUSTED`` or ``BUDGET_EXCEEDED``.
        witness: A verified coloring when ``status`` is ``FOUND``.
        nodes: The number of search nodes expanded.
    """

    status: SearchStatus
    witness: Optional[EdgeColoring]
    nodes: int


@dataclass(frozen=True)
class KSearch:
    """
    One decision made while computing an impropriety.
    """

    component: int
    k: int
    status: SearchStatus
    nodes: int


@dataclass(frozen=True)
class SolveStats:
    """
    Args:
        nodes: Search nodes expanded over all decisions.
        seconds: Wall time.
        searches: Every decision, in the order made.
    """

    nodes: int
    seconds: float
    searches: Tuple[KSearch, ...]


@dataclass(frozen=True)
class SolveOutcome:
    """
    The exact impropriety of a graph.

    Args:
        impropriety: The smallest ``k`` with a k-improper interval coloring,
            the largest over components. 0 for a graph without edges.
        witness: A normalized coloring with that impropriety.
        stats: How the value was found.
    """

    impropriety: int
    witness: EdgeColoring
    stats: SolveStats


@dataclass(frozen=True)
class _Task:
    """
    One top-level branch of a search, picklable for worker processes.
    """

    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]
    k: int
    order: Tuple[int, ...]
    window: int
    prefix: Tuple[Tuple[int, int], ...]
    max_nodes: Optional[int]
    seconds: Optional[float]


class _OutOfBudget(Exception):
    """
    Raised inside a search when a limit is reached.
    """


class _Cancelled(Exception):
    """
    Raised inside a worker's search when another worker found a witness.
    """


class _Searcher:
    """
    Depth-first extension of a partial coloring, edge by edge.

    At each vertex the colored edges so far are tracked by their color
    counts, their smallest and largest color and how many are colored.
    """

    def __init__(self, task: _Task, cancel: Any = None) -> None:
        self._task = task
        self._cancel = cancel
        self._degree = [0] * task.vertex_count
        for u, v in task.edges:
            self._degree[u] += 1
            self._degree[v] += 1
        self._counts: List[Dict[int, int]] = [
            {} for _ in range(task.vertex_count)
        ]
        self._colored = [0] * task.vertex_count
        self._low: List[int] = [0] * task.vertex_count
        self._high: List[int] = [0] * task.vertex_count
        self._colors: List[Optional[int]] = [None] * len(task.edges)
        self._fixed = dict(task.prefix)
        self._deadline: Optional[float] = None
        if task.seconds is not None:
            self._deadline = time.monotonic() + task.seconds
        self.nodes = 0

    @property
    def colors(self) -> List[int]:
        """
        The colors of a completed search.
        """
        return [color for color in self._colors if color is not None]

    def _admits(self, vertex: int, color: int) -> bool:
        count = self._counts[vertex].get(color, 0)
        if count + 1 > self._task.k:
            return False
        if self._colored[vertex] == 0:
            return True
        low = min(self._low[vertex], color)
        high = max(self._high[vertex], color)
        distinct = len(self._counts[vertex]) + (count == 0)
        missing = high - low + 1 - distinct
        uncolored = self._degree[vertex] - self._colored[vertex] - 1
        return missing <= uncolored

    def _assign(self, vertex: int, color: int) -> Tuple[int, int]:
        saved = (self._low[vertex], self._high[vertex])
        counts = self._counts[vertex]
        counts[color] = counts.get(color, 0) + 1
        if self._colored[vertex] == 0:
            self._low[vertex] = self._high[vertex] = color
        else:
            self._low[vertex] = min(self._low[vertex], color)
            self._high[vertex] = max(self._high[vertex], color)
        self._colored[vertex] += 1
        return saved

    def _unassign(
        self,
        vertex: int,
        color: int,
        saved: Tuple[int, int],
    ) -> None:
        counts = self._counts[vertex]
        counts[color] -= 1
        if counts[color] == 0:
            del counts[color]
        self._colored[vertex] -= 1
        self._low[vertex], self._high[vertex] = saved

    def _candidates(self, u: int, v: int) -> List[int]:
        """
        Colors for the edge ``uv`` which keep the span at ``u`` and ``v``
        within their degrees, nearest the middle of the colors already at
        those vertices first.
        """
        lower = -self._task.window
        upper = self._task.window
        centers = []
        for vertex in (u, v):
            if self._colored[vertex]:
                degree = self._degree[vertex]
                lower = max(lower, self._high[vertex] - degree + 1)
                upper = min(upper, self._low[vertex] + degree - 1)
                centers.append(self._low[vertex] + self._high[vertex])
        center = centers[0] if centers else 0
        return sorted(
            range(lower, upper + 1),
            key=lambda color: (abs(2 * color - center), color),
        )

    def _tick(self) -> None:
        self.nodes += 1
        max_nodes = self._task.max_nodes
        if max_nodes is not None and self.nodes > max_nodes:
            raise _OutOfBudget
        if self.nodes % _CHECK_INTERVAL == 0:
            if self._deadline is not None:
                if time.monotonic() > self._deadline:
                    raise _OutOfBudget
            if self._cancel is not None and self._cancel.is_set():
                raise _Cancelled

    def extend(self, position: int = 0) -> bool:
        """
        Try to color the edges from ``position`` on in search order.
        """
        if position == len(self._task.order):
            return True
        self._tick()

        edge_id = self._task.order[position]
        u, v = self._task.edges[edge_id]
        if edge_id in self._fixed:
            candidates = [self._fixed[edge_id]]
        else:
            candidates = self._candidates(u=u, v=v)

        for color in candidates:
            if not (self._admits(u, color) and self._admits(v, color)):
                continue
            saved_u = self._assign(vertex=u, color=color)
            saved_v = self._assign(vertex=v, color=color)
            self._colors[edge_id] = color
            if self.extend(position=position + 1):
                return True
            self._colors[edge_id] = None
            self._unassign(vertex=v, color=color, saved=saved_v)
            self._unassign(vertex=u, color=color, saved=saved_u)
        return False


def _run_task(
    task: _Task,
    cancel: Any = None,
) -> Tuple[SearchStatus, Optional[List[int]], int]:
    searcher = _Searcher(task=task, cancel=cancel)
    try:
        found = searcher.extend()
    except _OutOfBudget:
        return SearchStatus.BUDGET_EXCEEDED, None, searcher.nodes
    except _Cancelled:
        return SearchStatus.EXHAUSTED, None, searcher.nodes
    if found:
        return SearchStatus.FOUND, searcher.colors, searcher.nodes
    return SearchStatus.EXHAUSTED, None, searcher.nodes


def breadth_first_edge_order(g: Graph) -> List[int]:
    """
    Return the edge ids in breadth-first order from a vertex of maximum
    degree, the smallest such vertex on ties.

    Every vertex's edges to not yet ordered neighbors follow in neighbor
    order.
    """
    if g.edge_count == 0:
        return []
    root = max(range(g.vertex_count), key=lambda v: (g.degree(v), -v))
    order: List[int] = []
    ordered = set()
    visited = {root}
    queue = [root]
    while queue:
        vertex = queue.pop(0)
        neighbors = sorted(zip(g.adjacency[vertex], g.incidence[vertex]))
        for neighbor, edge_id in neighbors:
            if edge_id not in ordered:
                ordered.add(edge_id)
                order.append(edge_id)
            if neighbor not in visited:
                visited.add(neighbor)
                queue.append(neighbor)
    return order


def default_window(g: Graph) -> int:
    """
    Return ``1 + sum(d(v) - 1)`` over the vertices with an edge.
    """
    return 1 + sum(
        g.degree(vertex) - 1
        for vertex in range(g.vertex_count)
        if g.degree(vertex)
    )


def _tasks(
    g: Graph,
    k: int,
    budget: SearchBudget,
    seconds: Optional[float],
) -> List[_Task]:
    """
    Split the search over the colors of the first two edges in search
    order.
    """
    order = breadth_first_edge_order(g=g)
    window = budget.window or default_window(g=g)
    if budget.symmetry_breaking:
        first_colors = [0]
        second_colors = list(range(0, window + 1))
    else:
        first_colors = list(range(-window, window + 1))
        second_colors = list(range(-window, window + 1))

    prefixes: List[Tuple[Tuple[int, int], ...]] = []
    for first in first_colors:
        if len(order) == 1:
            prefixes.append(((order[0], first),))
            continue
        first_edge = set(g.edges[order[0]])
        second_edge = set(g.edges[order[1]])
        for second in second_colors:
            # Adjacent edges of different colors must be close enough to
            # share an interval at the common vertex.
            if first_edge & second_edge:
                (shared,) = first_edge & second_edge
                if abs(second - first) > g.degree(shared) - 1:
                    continue
            prefixes.append(((order[0], first), (order[1], second)))

    return [
        _Task(
            vertex_count=g.vertex_count,
            edges=g.edges,
            k=k,
            order=tuple(order),
            window=window,
            prefix=prefix,
            max_nodes=budget.max_nodes,
            seconds=seconds,
        )
        for prefix in prefixes
    ]


def _decide_sequentially(
    tasks: List[_Task],
    max_nodes: Optional[int],
    deadline: Optional[float],
) -> Tuple[SearchStatus, Optional[List[int]], int]:
    nodes = 0
    for task in tasks:
        remaining_nodes = None
        if max_nodes is not None:
            remaining_nodes = max_nodes - nodes
            if remaining_nodes <= 0:
                return SearchStatus.BUDGET_EXCEEDED, None, nodes
        remaining_seconds = None
        if deadline is not None:
            remaining_seconds = deadline - time.monotonic()
            if remaining_seconds <= 0:
                return SearchStatus.BUDGET_EXCEEDED, None, nodes
        bounded = _Task(
            vertex_count=task.vertex_count,
            edges=task.edges,
            k=task.k,
            order=task.order,
            window=task.window,
            prefix=task.prefix,
            max_nodes=remaining_nodes,
            seconds=remaining_seconds,
        )
        status, colors, task_nodes = _run_task(task=bounded)
        nodes += task_nodes
        if status is not SearchStatus.EXHAUSTED:
            return status, colors, nodes
    return SearchStatus.EXHAUSTED, None, nodes


def _decide_in_parallel(
    tasks: List[_Task],
    workers: int,
) -> Tuple[SearchStatus, Optional[List[int]], int]:
    """
    Run the branches in worker processes. The first witness found sets a
    shared flag which makes the other workers stop.

    The node limit applies to each branch separately.
    """
    nodes = 0
    found: Optional[List[int]] = None
    out_of_budget = False
    with multiprocessing.Manager() as manager:
        cancel = manager.Event()
        with ProcessPoolExecutor(max_workers=workers) as executor:
            pending = {
                executor.submit(_run_task, task, cancel) for task in tasks
            }
            while pending:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for future in done:
                    if future.cancelled():
                        continue
                    status, colors, task_nodes = future.result()
                    nodes += task_nodes
                    if status is SearchStatus.FOUND and found is None:
                        found = colors
                        cancel.set()
                        for other in pending:
                            other.cancel()
                    elif status is SearchStatus.BUDGET_EXCEEDED:
                        out_of_budget = True

    if found is not None:
        return SearchStatus.FOUND, found, nodes
    if out_of_budget:
        return SearchStatus.BUDGET_EXCEEDED, None, nodes
    return SearchStatus.EXHAUSTED, None, nodes


def _decide(
    g: Graph,
    k: int,
    budget: SearchBudget,
    deadline: Optional[float],
) -> Decision:
    if k < 1:
        raise InvalidImpropriety(k=k)
    if not is_connected(g=g):
        raise DisconnectedGraph(
            'The search needs a connected graph; split it into components.',
        )
    if g.edge_count == 0:
        return Decision(
            status=SearchStatus.FOUND,
            witness=make_coloring(colors=[]),
            nodes=0,
        )

    seconds = None
    if deadline is not None:
        seconds = max(deadline - time.monotonic(), 0.0)
    tasks = _tasks(g=g, k=k, budget=budget, seconds=seconds)
    workers = budget.workers or worker_count()
    if workers > 1 and len(tasks) > 1:
        status, colors, nodes = _decide_in_parallel(
            tasks=tasks,
            workers=workers,
        )
    else:
        status, colors, nodes = _decide_sequentially(
            tasks=tasks,
            max_nodes=budget.max_nodes,
            deadline=deadline,
        )

    witness = None
    if colors is not None:
        witness = make_coloring(colors=colors)
        report = verify(g=g, c=witness)
        if report.impropriety is None or report.impropriety > k:
            raise UnsoundWitness(
                f'The search returned {witness} which is not a '
                f'{k}-improper interval coloring.',
            )
    LOGGER.debug('k = %d: %s after %d nodes', k, status.value, nodes)
    return Decision(status=status, witness=witness, nodes=nodes)


def exists_k_improper(g: Graph, k: int, budget: SearchBudget) -> Decision:
    """
    Decide whether a connected graph has a k-improper interval coloring.

    Edges are colored depth first in breadth-first edge order. A color is
    only tried for an edge when, at both ends, it keeps every color count at
    most ``k`` and leaves no more gaps in the colors than there are
    uncolored edges left at that vertex.

    Args:
        g: A connected graph.
        k: The largest number of edges of one color allowed at a vertex.
        budget: Limits on the search.

    Returns:
        A verified witness, or a report that there is none, or that the
        budget ran out first.

    Raises:
        InvalidImpropriety: ``k`` is less than 1.
        DisconnectedGraph: ``g`` is not connected.
    """
    deadline = None
    if budget.time_limit is not None:
        deadline = time.monotonic() + budget.time_limit
    return _decide(g=g, k=k, budget=budget, deadline=deadline)


def exact_impropriety(g: Graph, budget: SearchBudget) -> SolveOutcome:
    """
    Compute the interval coloring impropriety of a graph.

    Each component is solved for ``k = 1, 2, ...`` until a witness is
    found. At ``k = Δ`` a component is colored with a single color without
    searching. The answer is the largest value over components.

    Raises:
        BudgetExceeded: A decision ran out of budget. The node limit applies
            to each decision and the time limit to the whole computation.
    """
    start = time.monotonic()
    deadline = None
    if budget.time_limit is not None:
        deadline = start + budget.time_limit

    colors = [0] * g.edge_count
    searches: List[KSearch] = []
    impropriety = 0
    total_nodes = 0
    for index, component in enumerate(components(g=g)):
        graph = component.graph
        if graph.edge_count == 0:
            continue
        delta = max_degree(g=graph)
        for k in range(1, delta + 1):
            if k == delta:
                decision = Decision(
                    status=SearchStatus.FOUND,
                    witness=make_coloring(colors=[1] * graph.edge_count),
                    nodes=0,
                )
            else:
                decision = _decide(
                    g=graph,
                    k=k,
                    budget=budget,
                    deadline=deadline,
                )
            total_nodes += decision.nodes
            searches.append(
                KSearch(
                    component=index,
                    k=k,
                    status=decision.status,
                    nodes=decision.nodes,
                ),
            )
            if decision.status is SearchStatus.BUDGET_EXCEEDED:
                raise BudgetExceeded(k=k, nodes=total_nodes)
            if decision.witness is not None:
                normalized = normalize(c=decision.witness)
                placed = zip(component.edge_ids, normalized.colors)
                for edge_id, color in placed:
                    colors[edge_id] = color
                impropriety = max(impropriety, k)
                break

    seconds = time.monotonic() - start
    LOGGER.info(
        'Impropriety %d found with %d nodes in %.3f seconds',
        impropriety,
        total_nodes,
        seconds,
    )
    return SolveOutcome(
        impropriety=impropriety,
        witness=make_coloring(colors=colors),
        stats=SolveStats(
            nodes=total_nodes,
            seconds=seconds,
            searches=tuple(searches),
        ),
    )
