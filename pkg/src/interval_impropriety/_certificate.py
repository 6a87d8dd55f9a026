"""
Isomorphism certificates for small graphs.

The certificate is the smallest upper-triangle adjacency bit string over the
vertex orders reachable by color refinement and individualization. Both
steps commute with relabeling, so isomorphic graphs reach the same set of
bit strings.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from interval_impropriety._constants import CERTIFICATE_VERTEX_LIMIT
from interval_impropriety.exceptions import GraphTooLarge
from interval_impropriety.graph import Graph


@dataclass(frozen=True)
class Certificate:
    """
    A byte string which is equal for two graphs exactly when they are
    isomorphic.

    Args:
        canonical_form: The vertex count followed by packed adjacency bits.
    """

    canonical_form: bytes


def _refine(
    adjacency: Sequence[Sequence[int]],
    colors: Sequence[int],
) -> List[int]:
    """
    Refine an ordered vertex partition until it is equitable.

    Colors are renumbered ``0, 1, ...`` by sorted signature, so the result
    does not depend on vertex names.
    """
    current = list(colors)
    while True:
        signatures = [
            (current[v], tuple(sorted(current[u] for u in adjacency[v])))
            for v in range(len(current))
        ]
        ranks = {
            signature: rank
            for rank, signature in enumerate(sorted(set(signatures)))
        }
        refined = [ranks[signature] for signature in signatures]
        if len(ranks) == len(set(current)):
            return refined
        current = refined


def _are_twins(adjacency: Sequence[Sequence[int]], u: int, v: int) -> bool:
    """
    Return whether swapping ``u`` and ``v`` is an automorphism.
    """
    return set(adjacency[u]) - {v} == set(adjacency[v]) - {u}


def _discrete_colorings(
    adjacency: Sequence[Sequence[int]],
    colors: List[int],
) -> Iterator[List[int]]:
    """
    Yield every discrete refinement reachable by individualizing vertices of
    the first non-singleton cell.
    """
    sizes = Counter(colors)
    if len(sizes) == len(colors):
        yield colors
        return

    target = min(color for color, size in sizes.items() if size > 1)
    representatives: List[int] = []
    for vertex, color in enumerate(colors):
        if color != target:
            continue
        # Twins give the same subtree up to an automorphism.
        if any(
            _are_twins(adjacency=adjacency, u=vertex, v=other)
            for other in representatives
        ):
            continue
        representatives.append(vertex)
        individualized = [2 * cell + 1 for cell in colors]
        individualized[vertex] = 2 * target
        yield from _discrete_colorings(
            adjacency=adjacency,
            colors=_refine(adjacency=adjacency, colors=individualized),
        )


def _adjacency_bits(
    adjacency: Sequence[Sequence[int]],
    order: Sequence[int],
) -> Tuple[bool, ...]:
    """
    Return the upper triangle of the adjacency matrix, column by column, for
    the vertices listed in ``order``.
    """
    bits = []
    for column in range(1, len(order)):
        later = set(adjacency[order[column]])
        for row in range(column):
            bits.append(order[row] in later)
    return tuple(bits)


def certificate(g: Graph) -> Certificate:
    """
    Compute an isomorphism certificate.

    Args:
        g: A graph with at most 12 vertices.

    Returns:
        A certificate which is equal for two graphs if and only if they are
        isomorphic.

    Raises:
        GraphTooLarge: The graph has more than 12 vertices.
    """
    if g.vertex_count > CERTIFICATE_VERTEX_LIMIT:
        raise GraphTooLarge(
            vertex_count=g.vertex_count,
            limit=CERTIFICATE_VERTEX_LIMIT,
        )

    start = _refine(
        adjacency=g.adjacency,
        colors=[g.degree(vertex) for vertex in range(g.vertex_count)],
    )
    best: Optional[Tuple[bool, ...]] = None
    for colors in _discrete_colorings(adjacency=g.adjacency, colors=start):
        order = sorted(range(g.vertex_count), key=colors.__getitem__)
        bits = _adjacency_bits(adjacency=g.adjacency, order=order)
        if best is None or bits < best:
            best = bits

    packed = np.packbits(np.array(best or (), dtype=np.uint8))
    return Certificate(
        canonical_form=bytes([g.vertex_count]) + packed.tobytes(),
    )
