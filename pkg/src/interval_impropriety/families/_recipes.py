"""
Recipes naming generated graphs, and the construction traces which come
with them.
"""

import dataclasses
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple, Union

from interval_impropriety._constants import FamilyKind

from .exceptions import InvalidRecipe

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class FamilyRecipe:
    """
    The parameters which identify one generated graph.

    Args:
        kind: The family.
        params: Parameters for the family, for example ``{'n': 5}``. Product
            families take nested recipes under ``'g'`` and ``'h'``.
    """

    kind: FamilyKind
    params: Dict[str, Any] = field(default_factory=dict)

    def get_int(self, name: str, minimum: int) -> int:
        """
        Return an integer parameter.

        Raises:
            InvalidRecipe: The parameter is missing, not an integer, or less
                than ``minimum``.
        """
        value = self.params.get(name)
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidRecipe(
                kind=self.kind.value,
                message=f'"{name}" must be an integer.',
            )
        if value < minimum:
            raise InvalidRecipe(
                kind=self.kind.value,
                message=f'"{name}" must be at least {minimum}, got {value}.',
            )
        return value

    def get_recipe(self, name: str) -> 'FamilyRecipe':
        """
        Return a nested recipe.

        Raises:
            InvalidRecipe: The parameter is not a recipe.
        """
        value = self.params.get(name)
        if not isinstance(value, FamilyRecipe):
            raise InvalidRecipe(
                kind=self.kind.value,
                message=f'"{name}" must be a recipe.',
            )
        return value

    @property
    def seed(self) -> int:
        """
        The random seed, 0 when not given.
        """
        return int(self.params.get('seed', 0))


@dataclass(frozen=True)
class MultipartiteLabels:
    """
    The parts ``A_1, B_1, A_2, B_2, ...`` of ``K_{s,t,...,s,t}``.

    Args:
        parts: Vertex indices of each part, in order.
        s: The size of every part ``A_i``.
        t: The size of every part ``B_i``.
    """

    parts: Tuple[Tuple[int, ...], ...]
    s: int
    t: int

    def part_index(self, vertex: int) -> int:
        """
        Return the position of the part containing ``vertex``.
        """
        for index, part in enumerate(self.parts):
            if vertex in part:
                return index
        raise KeyError(vertex)

    def pair_index(self, vertex: int) -> int:
        """
        Return ``i - 1`` for a vertex of ``A_i`` or ``B_i``.
        """
        return self.part_index(vertex) // 2

    def within_part_index(self, vertex: int) -> int:
        """
        Return the 1-based position of ``vertex`` in its part.
        """
        return self.parts[self.part_index(vertex)].index(vertex) + 1

    def name(self, vertex: int) -> str:
        """
        Return ``x{i},{j}`` for vertices of ``A_i`` and ``y{i},{j}`` for
        vertices of ``B_i``.
        """
        letter = 'x' if self.part_index(vertex) % 2 == 0 else 'y'
        pair = self.pair_index(vertex) + 1
        return f'{letter}{pair},{self.within_part_index(vertex)}'


@dataclass(frozen=True)
class TwoPathSequence:
    """
    An alternating sequence of edges ``e_0, ..., e_n`` and triangles
    ``t_1, ..., t_n`` where ``t_i`` is spanned by ``e_{i-1}`` and ``e_i``.

    Args:
        edges: The listed edges.
        triangles: The vertex triples of the triangles.
    """

    edges: Tuple[Tuple[int, int], ...]
    triangles: Tuple[Triple, ...]


@dataclass(frozen=True)
class TwoTreeTrace:
    """
    How a 2-tree is built from a triangle.

    Args:
        base: The vertices of the starting triangle.
        additions: ``(v, (u, w))`` for each added vertex ``v`` joined to both
            ends of the existing edge ``uw``, in order.
    """

    base: Triple
    additions: Tuple[Tuple[int, Tuple[int, int]], ...]


@dataclass(frozen=True)
class TriangulationTrace:
    """
    The levels of an iterated triangulation.

    The outer triangle and every face triple are counterclockwise.

    Args:
        outer: The outer triangle.
        levels: For each level, ``(v, (u_1, u_2, u_3))`` for each vertex
            ``v`` placed inside the face ``u_1 u_2 u_3``.
    """

    outer: Triple
    levels: Tuple[Tuple[Tuple[int, Triple], ...], ...]


@dataclass(frozen=True)
class CoronaLayout:
    """
    Where the copies of ``H`` sit in ``G ⊙ H``.

    Args:
        base_vertex_count: The number of vertices of ``G``; they keep their
            indices.
        copies: For each vertex ``v`` of ``G``, the vertices of its copy of
            ``H``, listed in the order of ``H``'s vertices.
        copy_edges: For each ``v``, the edge ids of its copy of ``H``, in
            the order of ``H``'s edges.
        attachment_edges: For each ``v``, the edge ids joining ``v`` to its
            copy, in the order of ``copies[v]``.
    """

    base_vertex_count: int
    copies: Tuple[Tuple[int, ...], ...]
    copy_edges: Tuple[Tuple[int, ...], ...]
    attachment_edges: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class PolygonTriangulation:
    """
    A maximal outerplanar graph as a triangulated polygon.

    Args:
        outer_cycle: The boundary of the polygon.
        diagonals: The chords.
        trace: The graph as a 2-tree.
    """

    outer_cycle: Tuple[int, ...]
    diagonals: Tuple[Tuple[int, int], ...]
    trace: TwoTreeTrace


@dataclass(frozen=True)
class SpiderLabels:
    """
    Args:
        center: The vertex of degree at least 3.
        legs: The vertices of each leg, starting next to the center.
    """

    center: int
    legs: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class CaterpillarLabels:
    """
    Args:
        spine: The path left after removing leaves, in order.
        leaves: For each spine vertex, its attached leaves.
    """

    spine: Tuple[int, ...]
    leaves: Tuple[Tuple[int, ...], ...]


Trace = Union[
    MultipartiteLabels,
    TwoPathSequence,
    TwoTreeTrace,
    TriangulationTrace,
    CoronaLayout,
    PolygonTriangulation,
    SpiderLabels,
    CaterpillarLabels,
]


def recipe_to_json(recipe: FamilyRecipe) -> Dict[str, Any]:
    """
    Return a JSON-compatible description of a recipe.
    """
    params = {
        name: recipe_to_json(value) if isinstance(value, FamilyRecipe)
        else value
        for name, value in recipe.params.items()
    }
    return {'kind': recipe.kind.value, 'params': params}


def trace_to_json(trace: Optional[Trace]) -> Optional[Dict[str, Any]]:
    """
    Return a JSON-compatible description of a trace.
    """
    if trace is None:
        return None
    document = dataclasses.asdict(trace)
    document['type'] = type(trace).__name__
    return document
