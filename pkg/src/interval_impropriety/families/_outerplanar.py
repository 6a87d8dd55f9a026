"""
Maximal outerplanar graphs as triangulated polygons.
"""

import logging
import random
from functools import lru_cache
from typing import FrozenSet, List, Tuple

from interval_impropriety._certificate import certificate
from interval_impropriety._constants import (
    CERTIFICATE_VERTEX_LIMIT,
    FamilyKind,
)
from interval_impropriety.graph import Graph, make_graph

from ._recipes import FamilyRecipe, PolygonTriangulation
from ._registry import family
from ._two_trees import recover_two_tree_trace
from .exceptions import UnsupportedSize

LOGGER = logging.getLogger(__name__)

Diagonals = FrozenSet[Tuple[int, int]]


@lru_cache(maxsize=None)
def _triangulations(low: int, high: int) -> Tuple[Diagonals, ...]:
    """
    Return every set of diagonals triangulating the polygon
    ``low, low + 1, ..., high`` whose base is the side ``(low, high)``.
    """
    if high - low < 2:
        return (frozenset(),)

    result = []
    for apex in range(low + 1, high):
        own = set()
        if apex - low >= 2:
            own.add((low, apex))
        if high - apex >= 2:
            own.add((apex, high))
        for left in _triangulations(low=low, high=apex):
            for right in _triangulations(low=apex, high=high):
                result.append(frozenset(own) | left | right)
    return tuple(result)


def polygon_graph(
    n: int,
    diagonals: Diagonals,
) -> Tuple[Graph, PolygonTriangulation]:
    """
    Return the polygon ``0, ..., n - 1`` with the given diagonals.

    The boundary edges come first, in order, then the sorted diagonals.
    """
    boundary = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
    chords = sorted(diagonals)
    graph = make_graph(vertex_count=n, edges=boundary + chords)
    triangulation = PolygonTriangulation(
        outer_cycle=tuple(range(n)),
        diagonals=tuple(chords),
        trace=recover_two_tree_trace(g=graph),
    )
    return graph, triangulation


def random_maximal_outerplanar(
    n: int,
    seed: int,
) -> Tuple[Graph, PolygonTriangulation]:
    """
    Triangulate the polygon ``0, ..., n - 1`` by choosing a uniformly random
    apex over each side in turn.
    """
    rng = random.Random(seed)
    diagonals = set()
    pending = [(0, n - 1)]
    while pending:
        low, high = pending.pop()
        if high - low < 2:
            continue
        apex = rng.randrange(low + 1, high)
        if apex - low >= 2:
            diagonals.add((low, apex))
        if high - apex >= 2:
            diagonals.add((apex, high))
        pending.extend([(low, apex), (apex, high)])
    return polygon_graph(n=n, diagonals=frozenset(diagonals))


def enumerate_maximal_outerplanar(
    n: int,
) -> List[Tuple[Graph, PolygonTriangulation]]:
    """
    Return every maximal outerplanar graph on ``n`` vertices, one per
    isomorphism class, each with its polygon.

    Raises:
        UnsupportedSize: ``n`` is not in ``[3, 12]``.
    """
    if not 3 <= n <= CERTIFICATE_VERTEX_LIMIT:
        raise UnsupportedSize(n=n, low=3, high=CERTIFICATE_VERTEX_LIMIT)

    seen = set()
    result = []
    for diagonals in _triangulations(low=0, high=n - 1):
        edges = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
        key = certificate(
            g=make_graph(vertex_count=n, edges=edges + sorted(diagonals)),
        )
        if key in seen:
            continue
        seen.add(key)
        result.append(polygon_graph(n=n, diagonals=diagonals))
    LOGGER.debug(
        '%d maximal outerplanar graphs on %d vertices',
        len(result),
        n,
    )
    return result


@family(FamilyKind.MAXIMAL_OUTERPLANAR)
def _generate_maximal_outerplanar(
    recipe: FamilyRecipe,
) -> Tuple[Graph, PolygonTriangulation]:
    n = recipe.get_int('n', minimum=3)
    return random_maximal_outerplanar(n=n, seed=recipe.seed)
