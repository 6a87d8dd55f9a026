"""
Plain text tables of colorings, one row and one column per vertex.
"""

from typing import List, Optional

from interval_impropriety.coloring import EdgeColoring, verify
from interval_impropriety.exceptions import NotAnIntervalColoring
from interval_impropriety.families import MultipartiteLabels
from interval_impropriety.graph import Graph


def _names(g: Graph, labels: Optional[MultipartiteLabels]) -> List[str]:
    if labels is None:
        return [str(vertex) for vertex in range(g.vertex_count)]
    return [labels.name(vertex) for vertex in range(g.vertex_count)]


def emit_table(
    g: Graph,
    c: EdgeColoring,
    labels: Optional[MultipartiteLabels] = None,
) -> str:
    """
    Return the coloring as a matrix with a header row and column of vertex
    names and the color of ``uv`` at row ``u``, column ``v``.

    Cells of non-adjacent pairs, including the diagonal, are blank. Columns
    are right aligned and trailing spaces are removed.

    Args:
        g: The graph.
        c: An interval coloring of ``g``.
        labels: Part labels. With labels, vertices are named ``x{i},{j}``
            and ``y{i},{j}``, otherwise by their indices.

    Raises:
        NotAnIntervalColoring: ``c`` is not an interval coloring of ``g``.
    """
    report = verify(g=g, c=c)
    if not report.all_intervals:
        raise NotAnIntervalColoring(vertices=report.offending_vertices())

    names = _names(g=g, labels=labels)
    cells = [[''] * (g.vertex_count + 1) for _ in range(g.vertex_count + 1)]
    for vertex, name in enumerate(names, start=1):
        cells[0][vertex] = name
        cells[vertex][0] = name
    for edge_id, (u, v) in enumerate(g.edges):
        cells[u + 1][v + 1] = str(c[edge_id])
        cells[v + 1][u + 1] = str(c[edge_id])

    widths = [
        max(len(row[column]) for row in cells)
        for column in range(g.vertex_count + 1)
    ]
    lines = [
        ' '.join(cell.rjust(width) for cell, width in zip(row, widths))
        for row in cells
    ]
    return '\n'.join(line.rstrip() for line in lines)
