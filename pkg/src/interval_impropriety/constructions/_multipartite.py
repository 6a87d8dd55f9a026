"""
Interval colorings of ``K_{s,t,...,s,t}`` with ``2^ell`` parts, built from
sequentially colored blocks.

Parts come in pairs ``A_i`` (``s`` vertices) and ``B_i`` (``t`` vertices).
The edges between two parts form a block which is colored sequentially: the
edge from the ``i``-th vertex of one part to the ``j``-th vertex of the other
gets ``shift + i + j - 1``.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from interval_impropriety.coloring import EdgeColoring, make_coloring
from interval_impropriety.families import (
    MultipartiteLabels,
    alternating_multipartite,
)
from interval_impropriety.graph import Graph

from ._checks import certified
from .exceptions import PreconditionFailed

# The largest number of doublings built.
MAX_ELL = 5


class BlockFamily(Enum):
    """
    The kinds of block between two parts.

    ``X_s`` joins two ``A`` parts and ``X_t`` two ``B`` parts. ``Y_s`` has
    an ``A`` part for rows and a ``B`` part for columns, ``Y_t`` the other
    way round.
    """

    X_S = 'X_s'
    X_T = 'X_t'
    Y_S = 'Y_s'
    Y_T = 'Y_t'


def block_shift(family: BlockFamily, k: int, s: int, t: int) -> int:
    """
    Return the shift of the block of a family with index ``k``.
    """
    shifts = {
        BlockFamily.X_S: (k - 1) * s + k * t,
        BlockFamily.X_T: k * s + (k - 1) * t,
        BlockFamily.Y_S: k * (s + t),
        BlockFamily.Y_T: k * (s + t),
    }
    return shifts[family]


@dataclass(frozen=True)
class ShiftBlock:
    """
    A ``rows`` by ``cols`` block colored sequentially with a shift.

    Row ``i`` holds the interval ``[shift + i, shift + i + cols - 1]`` and
    column ``j`` the interval ``[shift + j, shift + j + rows - 1]``.
    """

    rows: int
    cols: int
    shift: int

    def entry(self, i: int, j: int) -> int:
        """
        Return the color in row ``i`` and column ``j``, both 1-based.
        """
        return self.shift + i + j - 1

    @property
    def entries(self) -> np.ndarray:
        """
        The block as a matrix.
        """
        return np.add.outer(
            np.arange(1, self.rows + 1),
            np.arange(1, self.cols + 1),
        ) + (self.shift - 1)


def sequential_block(s: int, t: int, shift: int) -> ShiftBlock:
    """
    Return the ``s`` by ``t`` block colored sequentially with ``shift``.

    Raises:
        PreconditionFailed: A dimension is not positive.
    """
    if s < 1 or t < 1:
        raise PreconditionFailed(
            f'A block needs positive dimensions, got {s} by {t}.',
        )
    return ShiftBlock(rows=s, cols=t, shift=shift)


def pair_block_indices(pairs: int) -> np.ndarray:
    """
    Return the block index between every two pairs of parts.

    The indices for ``2p`` pairs are those for ``p`` pairs on both diagonal
    quadrants and the same indices plus ``p`` on the others. The first pair
    meets the second half with blocks ``p, ..., 2p - 1`` and every other
    pair meets it with those blocks, permuted as in the smaller plan.
    """
    if pairs == 1:
        return np.zeros((1, 1), dtype=int)
    half = pairs // 2
    inner = pair_block_indices(pairs=half)
    return np.block([[inner, inner + half], [inner + half, inner]])


@dataclass(frozen=True)
class BlockPlan:
    """
    Which block colors the edges between each two parts.

    Args:
        labels: The parts.
        indices: ``indices[i][j]`` is the block index between pair ``i``
            and pair ``j``.
    """

    labels: MultipartiteLabels
    indices: Tuple[Tuple[int, ...], ...]

    @property
    def part_count(self) -> int:
        """
        The number of parts.
        """
        return len(self.labels.parts)

    def block(
        self,
        row_part: int,
        col_part: int,
    ) -> Optional[Tuple[BlockFamily, int]]:
        """
        Return the family and index of the block with ``row_part`` for rows
        and ``col_part`` for columns, or ``None`` on the diagonal.
        """
        if row_part == col_part:
            return None
        k = self.indices[row_part // 2][col_part // 2]
        families = {
            (0, 0): BlockFamily.X_S,
            (1, 1): BlockFamily.X_T,
            (0, 1): BlockFamily.Y_S,
            (1, 0): BlockFamily.Y_T,
        }
        return families[(row_part % 2, col_part % 2)], k

    def shift(self, row_part: int, col_part: int) -> Optional[int]:
        """
        Return the shift of a block, or ``None`` on the diagonal.
        """
        block = self.block(row_part=row_part, col_part=col_part)
        if block is None:
            return None
        family, k = block
        return block_shift(
            family=family,
            k=k,
            s=self.labels.s,
            t=self.labels.t,
        )

    def symbolic(self) -> str:
        """
        Return the plan as a table of block names such as ``Y_s,1``.
        """
        names = [
            f'{"AB"[part % 2]}{part // 2 + 1}'
            for part in range(self.part_count)
        ]
        cells: List[List[str]] = [[''] + names]
        for row_part, name in enumerate(names):
            row = [name]
            for col_part in range(self.part_count):
                block = self.block(row_part=row_part, col_part=col_part)
                if block is None:
                    row.append('')
                else:
                    family, k = block
                    row.append(f'{family.value},{k}')
            cells.append(row)

        width = max(len(cell) for row in cells for cell in row)
        return '\n'.join(
            ' '.join(cell.rjust(width) for cell in row).rstrip()
            for row in cells
        )


@certified(bound=lambda graph, arguments: 1)
def color_multipartite_stst(
    s: int,
    t: int,
    ell: int,
) -> Tuple[Graph, EdgeColoring, BlockPlan]:
    """
    Interval color ``K_{s,t,...,s,t}`` with ``m = 2^ell`` parts.

    With ``m = 2`` the single block is ``Y_{s,0}``. With ``2m`` parts, both
    halves are colored as with ``m`` parts, the rows of the first pair are
    extended into the other half with blocks ``k = m/2, ..., m - 1`` and the
    blocks of the remaining quadrant copy those rows.

    The largest color is ``(m/2)(s + t) - 1``.

    Returns:
        The graph with parts ``A_1, B_1, A_2, B_2, ...``, its coloring and the
        block plan.

    Raises:
        PreconditionFailed: ``s`` or ``t`` is less than 1 or ``ell`` is not
            in ``[1, 5]``.
    """
    if s < 1 or t < 1:
        raise PreconditionFailed(f's and t must be at least 1, got {s}, {t}.')
    if not 1 <= ell <= MAX_ELL:
        raise PreconditionFailed(
            f'ell must be in [1, {MAX_ELL}], got {ell}.',
        )

    parts = 2 ** ell
    graph, labels = alternating_multipartite(s=s, t=t, parts=parts)
    indices = pair_block_indices(pairs=parts // 2)
    plan = BlockPlan(
        labels=labels,
        indices=tuple(tuple(int(k) for k in row) for row in indices),
    )

    part_of: Dict[int, int] = {}
    position: Dict[int, int] = {}
    for part, members in enumerate(labels.parts):
        for offset, vertex in enumerate(members, start=1):
            part_of[vertex] = part
            position[vertex] = offset

    colors = []
    for u, v in graph.edges:
        shift = plan.shift(row_part=part_of[u], col_part=part_of[v])
        assert shift is not None
        colors.append(shift + position[u] + position[v] - 1)
    return graph, make_coloring(colors=colors), plan
