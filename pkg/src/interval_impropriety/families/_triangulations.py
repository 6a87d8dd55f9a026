"""
Iterated triangulations ``Tr(n)``.

``Tr(0)`` is a triangle. ``Tr(n)`` places one new vertex inside every inner
face of ``Tr(n - 1)`` and joins it to the three corners of that face.
"""

from typing import List, Tuple

from interval_impropriety._constants import FamilyKind
from interval_impropriety.graph import Graph, make_graph

from ._recipes import FamilyRecipe, TriangulationTrace, Triple
from ._registry import family


def iterated_triangulation_trace(n: int) -> TriangulationTrace:
    """
    Return the levels of ``Tr(n)``.

    The outer triangle is ``(0, 1, 2)``. Vertices are numbered in the order
    they are placed, and a face ``(a, b, c)`` with new vertex ``v`` becomes
    the faces ``(a, b, v)``, ``(b, c, v)`` and ``(c, a, v)``, which keeps
    every face counterclockwise.
    """
    outer = (0, 1, 2)
    faces: List[Triple] = [outer]
    next_vertex = 3
    levels = []
    for _ in range(n):
        additions = []
        subdivided: List[Triple] = []
        for a, b, c in faces:
            vertex = next_vertex
            next_vertex += 1
            additions.append((vertex, (a, b, c)))
            subdivided.extend([(a, b, vertex), (b, c, vertex), (c, a, vertex)])
        faces = subdivided
        levels.append(tuple(additions))
    return TriangulationTrace(outer=outer, levels=tuple(levels))


def replay_triangulation(trace: TriangulationTrace) -> Graph:
    """
    Build the graph of a triangulation trace.

    The outer edges ``(0, 1)``, ``(1, 2)``, ``(2, 0)`` come first, then for
    each placed vertex ``v`` in face ``(u_1, u_2, u_3)`` the edges
    ``(v, u_1)``, ``(v, u_2)``, ``(v, u_3)``.
    """
    a, b, c = trace.outer
    edges: List[Tuple[int, int]] = [(a, b), (b, c), (c, a)]
    vertex_count = 3
    for level in trace.levels:
        for vertex, face in level:
            edges.extend((vertex, corner) for corner in face)
            vertex_count += 1
    return make_graph(vertex_count=vertex_count, edges=edges)


def iterated_triangulation(n: int) -> Tuple[Graph, TriangulationTrace]:
    """
    Return ``Tr(n)`` and its levels.
    """
    trace = iterated_triangulation_trace(n=n)
    return replay_triangulation(trace=trace), trace


@family(FamilyKind.ITERATED_TRIANGULATION)
def _generate_iterated_triangulation(
    recipe: FamilyRecipe,
) -> Tuple[Graph, TriangulationTrace]:
    return iterated_triangulation(n=recipe.get_int('n', minimum=0))
