"""
Constructions, verification and exact search for improper interval
edge-colorings.
"""

from interval_impropriety.coloring import (
    EdgeColoring,
    VerificationReport,
    VertexProfile,
    impropriety_of,
    normalize,
    verify,
)
from interval_impropriety.graph import Graph, make_graph, max_degree

__all__ = [
    'EdgeColoring',
    'Graph',
    'VerificationReport',
    'VertexProfile',
    'impropriety_of',
    'make_graph',
    'max_degree',
    'normalize',
    'verify',
]
