"""
Corona and strong products.
"""

import logging
from typing import Tuple

from interval_impropriety._constants import (
    SOLVER_EDGE_LIMIT,
    SOLVER_VERTEX_LIMIT,
    FamilyKind,
)
from interval_impropriety.graph import Graph, make_graph

from ._classic import complete, cycle
from ._recipes import CoronaLayout, FamilyRecipe
from ._registry import GENERATORS, family
from .exceptions import InvalidRecipe

LOGGER = logging.getLogger(__name__)


def corona(g: Graph, h: Graph) -> Tuple[Graph, CoronaLayout]:
    """
    Return ``G ⊙ H``: ``G`` with one copy of ``H`` per vertex ``v`` of
    ``G``, and ``v`` joined to every vertex of its copy.

    Vertices of ``G`` keep their indices and the copy of vertex ``i`` takes
    the next block of ``|V(H)|`` indices. Edges of ``G`` come first; then,
    copy by copy, the edges of ``H`` followed by the attachment edges.

    Raises:
        InvalidRecipe: ``G`` has no vertices.
    """
    if g.vertex_count == 0:
        raise InvalidRecipe(
            kind=FamilyKind.CORONA.value,
            message='G must have a vertex.',
        )

    edges = list(g.edges)
    copies = []
    copy_edges = []
    attachment_edges = []
    for vertex in range(g.vertex_count):
        offset = g.vertex_count + vertex * h.vertex_count
        members = tuple(range(offset, offset + h.vertex_count))

        start = len(edges)
        edges.extend((offset + u, offset + w) for u, w in h.edges)
        copy_edges.append(tuple(range(start, len(edges))))

        start = len(edges)
        edges.extend((vertex, member) for member in members)
        attachment_edges.append(tuple(range(start, len(edges))))
        copies.append(members)

    graph = make_graph(
        vertex_count=g.vertex_count * (1 + h.vertex_count),
        edges=edges,
    )
    layout = CoronaLayout(
        base_vertex_count=g.vertex_count,
        copies=tuple(copies),
        copy_edges=tuple(copy_edges),
        attachment_edges=tuple(attachment_edges),
    )
    return graph, layout


def strong_product(g: Graph, h: Graph) -> Graph:
    """
    Return ``G ⊠ H`` on the vertices ``(a, b)``, numbered ``a * |V(H)| + b``.

    ``(a, b)`` and ``(c, d)`` are adjacent when ``a = c`` and ``bd`` is an
    edge, when ``b = d`` and ``ac`` is an edge, or when both ``ac`` and
    ``bd`` are edges. Edges are listed in sorted order.

    A product too large for the exact solver is logged as a warning.
    """
    size = h.vertex_count

    def index(a: int, b: int) -> int:
        return a * size + b

    pairs = set()
    for a in range(g.vertex_count):
        for b, d in h.edges:
            pairs.add(tuple(sorted((index(a, b), index(a, d)))))
    for a, c in g.edges:
        for b in range(size):
            pairs.add(tuple(sorted((index(a, b), index(c, b)))))
        for b, d in h.edges:
            pairs.add(tuple(sorted((index(a, b), index(c, d)))))
            pairs.add(tuple(sorted((index(a, d), index(c, b)))))

    product = make_graph(
        vertex_count=g.vertex_count * size,
        edges=sorted(pairs),
    )
    too_large = (
        product.vertex_count > SOLVER_VERTEX_LIMIT
        or product.edge_count > SOLVER_EDGE_LIMIT
    )
    if too_large:
        LOGGER.warning(
            'The strong product has %d vertices and %d edges, which is '
            'beyond what the exact solver is meant for.',
            product.vertex_count,
            product.edge_count,
        )
    return product


def generate_nested(recipe: FamilyRecipe, name: str) -> Graph:
    """
    Generate the graph of a nested recipe.
    """
    nested = recipe.get_recipe(name)
    graph, _ = GENERATORS[nested.kind](nested)
    return graph


@family(FamilyKind.CORONA)
def _generate_corona(recipe: FamilyRecipe) -> Tuple[Graph, CoronaLayout]:
    return corona(
        g=generate_nested(recipe=recipe, name='g'),
        h=generate_nested(recipe=recipe, name='h'),
    )


@family(FamilyKind.STRONG_PRODUCT)
def _generate_strong_product(recipe: FamilyRecipe) -> Tuple[Graph, None]:
    product = strong_product(
        g=generate_nested(recipe=recipe, name='g'),
        h=generate_nested(recipe=recipe, name='h'),
    )
    return product, None


@family(FamilyKind.WHEEL)
def _generate_wheel(recipe: FamilyRecipe) -> Tuple[Graph, CoronaLayout]:
    """
    ``W_n`` is ``K_1 ⊙ C_{n-1}``: hub 0 and rim ``1, ..., n - 1``.
    """
    n = recipe.get_int('n', minimum=4)
    return corona(g=complete(n=1), h=cycle(n=n - 1))
