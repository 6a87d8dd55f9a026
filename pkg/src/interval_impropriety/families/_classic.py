"""
Paths, cycles, stars, spiders, caterpillars, trees, complete and complete
multipartite graphs.
"""

import random
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from interval_impropriety._constants import FamilyKind
from interval_impropriety.graph import Graph, make_graph

from ._recipes import (
    CaterpillarLabels,
    FamilyRecipe,
    MultipartiteLabels,
    SpiderLabels,
)
from ._registry import family
from .exceptions import InvalidRecipe


def path(n: int) -> Graph:
    """
    Return ``P_n`` on ``0, ..., n - 1`` in order.
    """
    edges = [(i, i + 1) for i in range(n - 1)]
    return make_graph(vertex_count=n, edges=edges)


def cycle(n: int) -> Graph:
    """
    Return ``C_n``: the path ``0, ..., n - 1`` closed by ``(n - 1, 0)``.
    """
    edges = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
    return make_graph(vertex_count=n, edges=edges)


def star(leaves: int) -> Graph:
    """
    Return the star with center 0 and leaves ``1, ..., leaves``.
    """
    edges = [(0, leaf) for leaf in range(1, leaves + 1)]
    return make_graph(vertex_count=leaves + 1, edges=edges)


def complete(n: int) -> Graph:
    """
    Return ``K_n``.
    """
    return make_graph(vertex_count=n, edges=combinations(range(n), 2))


def spider(legs: Sequence[int]) -> Tuple[Graph, SpiderLabels]:
    """
    Return a spider with center 0 and legs of the given lengths.
    """
    edges = []
    leg_vertices = []
    next_vertex = 1
    for length in legs:
        vertices = tuple(range(next_vertex, next_vertex + length))
        next_vertex += length
        leg_vertices.append(vertices)
        edges.append((0, vertices[0]))
        edges.extend(zip(vertices, vertices[1:]))

    graph = make_graph(vertex_count=next_vertex, edges=edges)
    return graph, SpiderLabels(center=0, legs=tuple(leg_vertices))


def caterpillar(leaves: Sequence[int]) -> Tuple[Graph, CaterpillarLabels]:
    """
    Return a caterpillar whose spine is ``0, ..., len(leaves) - 1``, where
    spine vertex ``i`` has ``leaves[i]`` leaves attached.
    """
    spine = tuple(range(len(leaves)))
    edges = list(zip(spine, spine[1:]))
    attached: List[Tuple[int, ...]] = []
    next_vertex = len(spine)
    for vertex, count in zip(spine, leaves):
        own = tuple(range(next_vertex, next_vertex + count))
        next_vertex += count
        attached.append(own)
        edges.extend((vertex, leaf) for leaf in own)

    graph = make_graph(vertex_count=next_vertex, edges=edges)
    return graph, CaterpillarLabels(spine=spine, leaves=tuple(attached))


def random_tree(n: int, seed: int) -> Graph:
    """
    Return a uniformly random labeled tree on ``n`` vertices.
    """
    if n == 1:
        return make_graph(vertex_count=1, edges=[])
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    tree = nx.from_prufer_sequence(sequence)
    return make_graph(
        vertex_count=n,
        edges=sorted(tuple(sorted(edge)) for edge in tree.edges()),
    )


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """
    Return the complete multipartite graph with consecutive parts of the
    given sizes.

    Edges are listed row by row of the adjacency matrix.
    """
    owner = [
        index for index, size in enumerate(part_sizes) for _ in range(size)
    ]
    edges = [
        (u, v)
        for u, v in combinations(range(len(owner)), 2)
        if owner[u] != owner[v]
    ]
    return make_graph(vertex_count=len(owner), edges=edges)


def alternating_multipartite(
    s: int,
    t: int,
    parts: int,
) -> Tuple[Graph, MultipartiteLabels]:
    """
    Return ``K_{s,t,...,s,t}`` with the given even number of parts, ordered
    ``A_1, B_1, A_2, B_2, ...``.
    """
    sizes = [s if index % 2 == 0 else t for index in range(parts)]
    labelled = []
    start = 0
    for size in sizes:
        labelled.append(tuple(range(start, start + size)))
        start += size
    labels = MultipartiteLabels(parts=tuple(labelled), s=s, t=t)
    return complete_multipartite(part_sizes=sizes), labels


def _sizes(recipe: FamilyRecipe, name: str, minimum: int) -> List[int]:
    values = recipe.params.get(name)
    valid = (
        isinstance(values, (list, tuple))
        and all(
            isinstance(value, int) and value >= minimum for value in values
        )
    )
    if not valid:
        raise InvalidRecipe(
            kind=recipe.kind.value,
            message=f'"{name}" must be a list of integers >= {minimum}.',
        )
    return list(values)


@family(FamilyKind.PATH)
def _generate_path(recipe: FamilyRecipe) -> Tuple[Graph, None]:
    return path(n=recipe.get_int('n', minimum=1)), None


@family(FamilyKind.CYCLE)
def _generate_cycle(recipe: FamilyRecipe) -> Tuple[Graph, None]:
    return cycle(n=recipe.get_int('n', minimum=3)), None


@family(FamilyKind.STAR)
def _generate_star(recipe: FamilyRecipe) -> Tuple[Graph, None]:
    return star(leaves=recipe.get_int('n', minimum=1)), None


@family(FamilyKind.COMPLETE)
def _generate_complete(recipe: FamilyRecipe) -> Tuple[Graph, None]:
    return complete(n=recipe.get_int('n', minimum=1)), None


@family(FamilyKind.TREE)
def _generate_tree(recipe: FamilyRecipe) -> Tuple[Graph, None]:
    n = recipe.get_int('n', minimum=1)
    return random_tree(n=n, seed=recipe.seed), None


@family(FamilyKind.SPIDER)
def _generate_spider(recipe: FamilyRecipe) -> Tuple[Graph, SpiderLabels]:
    legs = _sizes(recipe=recipe, name='legs', minimum=1)
    if len(legs) < 3:
        raise InvalidRecipe(
            kind=recipe.kind.value,
            message='a spider needs at least 3 legs.',
        )
    return spider(legs=legs)


@family(FamilyKind.CATERPILLAR)
def _generate_caterpillar(
    recipe: FamilyRecipe,
) -> Tuple[Graph, CaterpillarLabels]:
    leaves = _sizes(recipe=recipe, name='leaves', minimum=0)
    if not leaves:
        raise InvalidRecipe(
            kind=recipe.kind.value,
            message='the spine needs at least one vertex.',
        )
    return caterpillar(leaves=leaves)


@family(FamilyKind.COMPLETE_MULTIPARTITE)
def _generate_complete_multipartite(
    recipe: FamilyRecipe,
) -> Tuple[Graph, Optional[MultipartiteLabels]]:
    if 'parts' in recipe.params:
        sizes = _sizes(recipe=recipe, name='parts', minimum=1)
        if len(sizes) < 2:
            raise InvalidRecipe(
                kind=recipe.kind.value,
                message='at least two parts are needed.',
            )
        return complete_multipartite(part_sizes=sizes), None

    s = recipe.get_int('s', minimum=1)
    t = recipe.get_int('t', minimum=1)
    if 'ell' in recipe.params:
        parts = 2 ** recipe.get_int('ell', minimum=1)
    else:
        parts = recipe.get_int('m', minimum=2)
    if parts % 2:
        raise InvalidRecipe(
            kind=recipe.kind.value,
            message=f'the number of parts must be even, got {parts}.',
        )
    return alternating_multipartite(s=s, t=t, parts=parts)
