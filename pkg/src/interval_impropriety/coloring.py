"""
Edge colorings and the interval coloring verifier.
"""

import json
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Tuple, Union

from interval_impropriety._constants import Undefined
from interval_impropriety.exceptions import (
    EmptyColoring,
    MalformedDocument,
    MissingEdgeColor,
)
from interval_impropriety.graph import Graph


@dataclass(frozen=True)
class EdgeColoring:
    """
    An assignment of an integer color to every edge of a graph.

    Colors may be zero or negative; use :func:`normalize` to start them at
    one.

    Args:
        colors: ``colors[i]`` is the color of the edge with id ``i``.
    """

    colors: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, edge_id: int) -> int:
        return self.colors[edge_id]

    def shifted(self, offset: int) -> 'EdgeColoring':
        """
        Return the coloring with ``offset`` added to every color.
        """
        return EdgeColoring(colors=tuple(c + offset for c in self.colors))

    def reflected(self) -> 'EdgeColoring':
        """
        Return the coloring with every color negated.
        """
        return EdgeColoring(colors=tuple(-c for c in self.colors))


def make_coloring(colors: Iterable[int]) -> EdgeColoring:
    """
    Build a coloring from colors listed in edge id order.
    """
    return EdgeColoring(colors=tuple(int(color) for color in colors))


@dataclass(frozen=True)
class VertexProfile:
    """
    The colors seen at one vertex.

    Args:
        vertex: The vertex.
        colors: The sorted multiset of colors on incident edges.
        min_color: The smallest incident color, or ``None`` for an isolated
            vertex.
        max_color: The largest incident color, or ``None`` for an isolated
            vertex.
        distinct_count: The number of distinct incident colors.
        max_multiplicity: The largest number of incident edges sharing a
            color.
        is_interval: Whether every integer between ``min_color`` and
            ``max_color`` is an incident color.
    """

    vertex: int
    colors: Tuple[int, ...]
    min_color: Optional[int]
    max_color: Optional[int]
    distinct_count: int
    max_multiplicity: int
    is_interval: bool


@dataclass(frozen=True)
class VerificationReport:
    """
    The result of checking a coloring.

    Args:
        profiles: One profile per vertex, in vertex order.
        all_intervals: Whether the colors at every vertex form an interval.
        impropriety: The largest multiplicity at any vertex when
            ``all_intervals`` holds, otherwise ``None``.
    """

    profiles: Tuple[VertexProfile, ...]
    all_intervals: bool
    impropriety: Optional[int]

    def offending_vertices(self) -> Tuple[int, ...]:
        """
        Return the vertices whose colors do not form an interval.
        """
        return tuple(
            profile.vertex
            for profile in self.profiles
            if not profile.is_interval
        )


def _profile(vertex: int, colors: Iterable[int]) -> VertexProfile:
    counts = Counter(colors)
    if not counts:
        return VertexProfile(
            vertex=vertex,
            colors=(),
            min_color=None,
            max_color=None,
            distinct_count=0,
            max_multiplicity=0,
            is_interval=True,
        )

    low = min(counts)
    high = max(counts)
    return VertexProfile(
        vertex=vertex,
        colors=tuple(sorted(counts.elements())),
        min_color=low,
        max_color=high,
        distinct_count=len(counts),
        max_multiplicity=max(counts.values()),
        is_interval=len(counts) == high - low + 1,
    )


def verify(g: Graph, c: EdgeColoring) -> VerificationReport:
    """
    Check whether a coloring is an interval coloring and find its
    impropriety.

    Args:
        g: The graph.
        c: A color for every edge of ``g``.

    Returns:
        A report with one profile per vertex. Isolated vertices count as
        intervals with multiplicity 0.

    Raises:
        MissingEdgeColor: ``c`` does not have exactly one color per edge.
    """
    if len(c) != g.edge_count:
        raise MissingEdgeColor(edge_count=g.edge_count, color_count=len(c))

    profiles = tuple(
        _profile(
            vertex=vertex,
            colors=(c[edge_id] for edge_id in g.incidence[vertex]),
        )
        for vertex in range(g.vertex_count)
    )
    all_intervals = all(profile.is_interval for profile in profiles)
    impropriety = None
    if all_intervals:
        impropriety = max(
            (profile.max_multiplicity for profile in profiles),
            default=0,
        )
    return VerificationReport(
        profiles=profiles,
        all_intervals=all_intervals,
        impropriety=impropriety,
    )


def impropriety_of(report: VerificationReport) -> Union[int, Undefined]:
    """
    Return the impropriety recorded in a report, or
    ``Undefined.NOT_AN_INTERVAL_COLORING`` when there is a gap at some
    vertex.
    """
    if report.impropriety is None:
        return Undefined.NOT_AN_INTERVAL_COLORING
    return report.impropriety


def normalize(c: EdgeColoring) -> EdgeColoring:
    """
    Shift a coloring so that its smallest color is 1.

    Raises:
        EmptyColoring: The coloring has no edges.
    """
    if not c.colors:
        raise EmptyColoring('Cannot normalize a coloring with no edges.')
    return c.shifted(offset=1 - min(c.colors))


def coloring_to_json(c: EdgeColoring) -> Dict[str, Any]:
    """
    Return the JSON document ``{"colors": [...]}``.
    """
    return {'colors': list(c.colors)}


def coloring_from_json(document: Any) -> EdgeColoring:
    """
    Read a coloring from a parsed JSON document.

    Raises:
        MalformedDocument: The document does not have the expected shape.
    """
    try:
        colors = document['colors']
    except (KeyError, TypeError) as exc:
        message = 'A coloring document needs "colors".'
        raise MalformedDocument(message) from exc

    valid = isinstance(colors, list) and all(
        isinstance(color, int) and not isinstance(color, bool)
        for color in colors
    )
    if not valid:
        raise MalformedDocument('"colors" must be a list of integers.')
    return make_coloring(colors=colors)


def load_coloring(text: str) -> EdgeColoring:
    """
    Parse a coloring from JSON text.

    Raises:
        MalformedDocument: The text is not JSON or has the wrong shape.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f'Invalid JSON: {exc}') from exc
    return coloring_from_json(document=document)
