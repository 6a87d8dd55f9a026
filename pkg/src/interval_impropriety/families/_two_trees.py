"""
2-trees, squares of paths and 2-paths.
"""

import logging
import random
from typing import Dict, List, Optional, Sequence, Set, Tuple

from interval_impropriety._certificate import certificate
from interval_impropriety._constants import FamilyKind
from interval_impropriety.exceptions import InvalidGraph
from interval_impropriety.graph import Graph, make_graph

from ._recipes import FamilyRecipe, TwoPathSequence, TwoTreeTrace
from ._registry import family
from .exceptions import InvalidRecipe, InvalidTrace, UnsupportedSize

LOGGER = logging.getLogger(__name__)

TWO_TREE_ENUMERATION_LIMIT = 10


def replay_two_tree(trace: TwoTreeTrace) -> Graph:
    """
    Build the 2-tree described by a trace.

    The base triangle's edges come first, then the two edges of each added
    vertex ``v``: ``(v, u)`` and ``(v, w)``.

    Raises:
        InvalidTrace: The vertices are not ``0, ..., n - 1``, a vertex is
            added twice, or an addition is not attached to an edge.
    """
    a, b, c = trace.base
    edges = [(a, b), (b, c), (a, c)]
    present = {frozenset(edge) for edge in edges}
    vertices = {a, b, c}
    for vertex, (u, w) in trace.additions:
        if vertex in vertices:
            raise InvalidTrace(f'Vertex {vertex} is added twice.')
        if frozenset((u, w)) not in present:
            raise InvalidTrace(
                f'Vertex {vertex} is attached to {(u, w)}, which is not an '
                'edge.',
            )
        vertices.add(vertex)
        for neighbor in (u, w):
            edges.append((vertex, neighbor))
            present.add(frozenset((vertex, neighbor)))

    if vertices != set(range(len(vertices))):
        raise InvalidTrace('Vertices must be numbered 0, ..., n - 1.')
    return make_graph(vertex_count=len(vertices), edges=edges)


def recover_two_tree_trace(g: Graph) -> TwoTreeTrace:
    """
    Find a trace which builds ``g`` as a 2-tree.

    Simplicial vertices of degree 2 are peeled, smallest index first, until a
    triangle is left.

    Raises:
        InvalidTrace: ``g`` is not a 2-tree.
    """
    if g.vertex_count < 3 or g.edge_count != 2 * g.vertex_count - 3:
        raise InvalidTrace('A 2-tree on n vertices has 2n - 3 edges.')

    neighbors: Dict[int, Set[int]] = {
        vertex: set(g.adjacency[vertex]) for vertex in range(g.vertex_count)
    }
    peeled: List[Tuple[int, Tuple[int, int]]] = []
    while len(neighbors) > 3:
        for vertex in sorted(neighbors):
            if len(neighbors[vertex]) != 2:
                continue
            u, w = sorted(neighbors[vertex])
            if w in neighbors[u]:
                break
        else:
            raise InvalidTrace('There is no simplicial vertex of degree 2.')
        peeled.append((vertex, (u, w)))
        for neighbor in (u, w):
            neighbors[neighbor].discard(vertex)
        del neighbors[vertex]

    a, b, c = sorted(neighbors)
    if neighbors[a] != {b, c} or b not in neighbors[c]:
        raise InvalidTrace('The last three vertices are not a triangle.')
    return TwoTreeTrace(base=(a, b, c), additions=tuple(reversed(peeled)))


def random_two_tree(n: int, seed: int) -> Tuple[Graph, TwoTreeTrace]:
    """
    Grow a 2-tree on ``n`` vertices by attaching each new vertex to a
    uniformly random existing edge.
    """
    rng = random.Random(seed)
    edges = [(0, 1), (1, 2), (0, 2)]
    additions = []
    for vertex in range(3, n):
        u, w = edges[rng.randrange(len(edges))]
        additions.append((vertex, (u, w)))
        edges.extend([(vertex, u), (vertex, w)])
    trace = TwoTreeTrace(base=(0, 1, 2), additions=tuple(additions))
    return replay_two_tree(trace=trace), trace


def square_of_path_trace(n: int) -> TwoTreeTrace:
    """
    Return the trace which builds the square of ``P_n``, ``n >= 3``, by
    appending vertex ``i`` to the edge ``(i - 2, i - 1)``.
    """
    additions = tuple((i, (i - 2, i - 1)) for i in range(3, n))
    return TwoTreeTrace(base=(0, 1, 2), additions=additions)


def square_of_path(n: int) -> Tuple[Graph, Optional[TwoTreeTrace]]:
    """
    Return ``P_n`` with edges added between vertices at distance 2.

    The trace is ``None`` when ``n < 3``.
    """
    if n < 3:
        edges = [(i, i + 1) for i in range(n - 1)]
        return make_graph(vertex_count=n, edges=edges), None
    trace = square_of_path_trace(n=n)
    return replay_two_tree(trace=trace), trace


def enumerate_two_trees(n: int) -> List[Tuple[Graph, TwoTreeTrace]]:
    """
    Return every 2-tree on ``n`` vertices, one per isomorphism class.

    Each class is represented by a 2-tree grown from a smaller
    representative, so every result comes with its trace.

    Raises:
        UnsupportedSize: ``n`` is not in ``[3, 10]``.
    """
    if not 3 <= n <= TWO_TREE_ENUMERATION_LIMIT:
        raise UnsupportedSize(n=n, low=3, high=TWO_TREE_ENUMERATION_LIMIT)

    base = TwoTreeTrace(base=(0, 1, 2), additions=())
    level = [(replay_two_tree(trace=base), base)]
    for vertex in range(3, n):
        seen = set()
        grown = []
        for graph, trace in level:
            for u, w in graph.edges:
                extended = TwoTreeTrace(
                    base=trace.base,
                    additions=trace.additions + ((vertex, (u, w)),),
                )
                candidate = replay_two_tree(trace=extended)
                key = certificate(g=candidate)
                if key in seen:
                    continue
                seen.add(key)
                grown.append((candidate, extended))
        level = grown
        LOGGER.debug('%d 2-trees on %d vertices', len(level), vertex + 1)
    return level


def make_two_path(edges: Sequence[Sequence[int]]) -> TwoPathSequence:
    """
    Build a 2-path from its listed edges ``e_0, ..., e_n``.

    Raises:
        InvalidTrace: Consecutive edges do not share exactly one vertex, an
            edge is repeated, a vertex leaves the sequence and comes back,
            or the vertices are not ``0, ..., m - 1``.
    """
    listed = [(int(u), int(v)) for u, v in edges]
    if len(listed) < 2:
        raise InvalidTrace('A 2-path needs at least two edges.')
    if len({frozenset(edge) for edge in listed}) != len(listed):
        raise InvalidTrace('The listed edges must be distinct.')

    triangles = []
    for previous, current in zip(listed, listed[1:]):
        spanned = set(previous) | set(current)
        if len(spanned) != 3:
            raise InvalidTrace(
                f'{previous} and {current} must share exactly one vertex.',
            )
        triangles.append(tuple(sorted(spanned)))

    occurrences: Dict[int, List[int]] = {}
    for index, edge in enumerate(listed):
        for vertex in edge:
            occurrences.setdefault(vertex, []).append(index)
    for vertex, indices in occurrences.items():
        if indices != list(range(indices[0], indices[-1] + 1)):
            raise InvalidTrace(f'Vertex {vertex} leaves and comes back.')
    if set(occurrences) != set(range(len(occurrences))):
        raise InvalidTrace('Vertices must be numbered 0, ..., m - 1.')

    sequence = TwoPathSequence(
        edges=tuple(listed),
        triangles=tuple((a, b, c) for a, b, c in triangles),
    )
    try:
        two_path_graph(sequence=sequence)
    except InvalidGraph as exc:
        raise InvalidTrace(str(exc)) from exc
    return sequence


def remaining_edges(sequence: TwoPathSequence) -> List[Tuple[int, int]]:
    """
    Return, for each triangle ``t_i``, its edge other than ``e_{i-1}`` and
    ``e_i``, oriented from ``e_{i-1}`` to ``e_i``.
    """
    result = []
    for previous, current in zip(sequence.edges, sequence.edges[1:]):
        (start,) = set(previous) - set(current)
        (end,) = set(current) - set(previous)
        result.append((start, end))
    return result


def two_path_graph(sequence: TwoPathSequence) -> Graph:
    """
    Return the graph of a 2-path: the listed edges in order, then the
    remaining edge of each triangle in order.
    """
    vertex_count = 1 + max(max(edge) for edge in sequence.edges)
    edges = list(sequence.edges) + remaining_edges(sequence=sequence)
    return make_graph(vertex_count=vertex_count, edges=edges)


def random_two_path(triangles: int, seed: int) -> TwoPathSequence:
    """
    Return a random 2-path: each listed edge keeps a random end of the
    previous one and adds a new vertex.
    """
    rng = random.Random(seed)
    edges = [(0, 1)]
    for new_vertex in range(2, triangles + 2):
        kept = rng.choice(edges[-1])
        edges.append((kept, new_vertex))
    return make_two_path(edges=edges)


def fan(n: int) -> TwoPathSequence:
    """
    Return the fan on ``n >= 3`` vertices as a 2-path: every listed edge
    joins the hub 0 to the next vertex of the path ``1, ..., n - 1``.
    """
    return make_two_path(edges=[(0, vertex) for vertex in range(1, n)])


def example_two_path() -> TwoPathSequence:
    """
    Return a fixed 2-path with 12 triangles on 14 vertices.

    Its vertices ``a, ..., n`` are numbered ``0, ..., 13``.
    """
    a, b, c, d, e, f, g, h, i, j, k, l, m, n = range(14)
    return make_two_path(
        edges=[
            (a, c),
            (c, b),
            (d, b),
            (e, b),
            (f, b),
            (f, g),
            (h, f),
            (h, i),
            (i, j),
            (i, k),
            (i, l),
            (l, m),
            (n, m),
        ],
    )


@family(FamilyKind.TWO_TREE)
def _generate_two_tree(recipe: FamilyRecipe) -> Tuple[Graph, TwoTreeTrace]:
    trace = recipe.params.get('trace')
    if isinstance(trace, TwoTreeTrace):
        return replay_two_tree(trace=trace), trace
    n = recipe.get_int('n', minimum=3)
    return random_two_tree(n=n, seed=recipe.seed)


@family(FamilyKind.SQUARE_OF_PATH)
def _generate_square_of_path(
    recipe: FamilyRecipe,
) -> Tuple[Graph, Optional[TwoTreeTrace]]:
    return square_of_path(n=recipe.get_int('n', minimum=1))


@family(FamilyKind.TWO_PATH)
def _generate_two_path(
    recipe: FamilyRecipe,
) -> Tuple[Graph, TwoPathSequence]:
    if 'edges' in recipe.params:
        try:
            sequence = make_two_path(edges=recipe.params['edges'])
        except (TypeError, ValueError) as exc:
            raise InvalidRecipe(
                kind=recipe.kind.value,
                message=str(exc),
            ) from exc
    elif recipe.params.get('example'):
        sequence = example_two_path()
    else:
        triangles = recipe.get_int('n', minimum=1)
        sequence = random_two_path(triangles=triangles, seed=recipe.seed)
    return two_path_graph(sequence=sequence), sequence


@family(FamilyKind.FAN)
def _generate_fan(recipe: FamilyRecipe) -> Tuple[Graph, TwoPathSequence]:
    sequence = fan(n=recipe.get_int('n', minimum=3))
    return two_path_graph(sequence=sequence), sequence
