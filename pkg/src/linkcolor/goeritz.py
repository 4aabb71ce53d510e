"""Goeritz forms of a shaded diagram.

Every crossing gets a sign relative to a shading: -1 when the shaded
quadrants are the pair flanking the under strand (slots 0 and 2), +1
when they flank the over strand. The Goeritz matrix is indexed by the
unshaded regions in ascending region order; off the diagonal, entry
(i, j) is minus the sign sum over crossings where regions i and j meet,
and the diagonal makes every row sum to zero. A crossing whose two
unshaded quadrants fall in one region cancels out of the matrix
entirely.

The adjusted form pads the matrix with zero rows and columns, one fewer
than the number of connected components of the shaded checkerboard
graph, so that diagrams differing by which piece carries the shading
still present comparable lattices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, RegionMap
from .intlattice import IntMatrix
from .shading import Shading, checkerboard_graphs

__all__ = [
    "GoeritzData",
    "adjusted_goeritz",
    "goeritz_index",
    "goeritz_matrix",
]


def goeritz_index(rm: RegionMap, s: Shading, crossing: int) -> int:
    """Sign of one crossing: -1 if the under-strand quadrants are shaded."""
    quads = rm.quadrant_region[crossing]
    shaded = {q for q in range(4) if s.shade[quads[q]]}
    if shaded == {0, 2}:
        return -1
    if shaded == {1, 3}:
        return 1
    raise RuntimeError("shading does not alternate around a crossing")


@dataclass(frozen=True)
class GoeritzData:
    """A Goeritz matrix together with its row/column labels and padding.

    ``unshaded_regions[i]`` is the region id behind row and column i of
    ``matrix``. ``beta_s`` is the component count of the shaded
    checkerboard graph; ``adjusted`` carries beta_s - 1 extra zero rows
    and columns after the originals.
    """

    unshaded_regions: tuple[int, ...]
    matrix: IntMatrix
    beta_s: int
    adjusted: IntMatrix


def goeritz_matrix(d: Diagram, rm: RegionMap, s: Shading) -> GoeritzData:
    regions = s.unshaded_regions()
    col = {r: i for i, r in enumerate(regions)}
    n = len(regions)
    grid = [[0] * n for _ in range(n)]
    for c in range(d.crossing_count):
        quads = rm.quadrant_region[c]
        eta = goeritz_index(rm, s, c)
        touched = [col[quads[q]] for q in range(4) if not s.shade[quads[q]]]
        i, j = touched
        if i != j:
            grid[i][j] -= eta
            grid[j][i] -= eta
    # Diagonal by complementation: every row of the full form sums to 0.
    for i in range(n):
        grid[i][i] = -sum(grid[i][j] for j in range(n) if j != i)
    shaded_graph, _ = checkerboard_graphs(d, rm, s)
    matrix = IntMatrix.from_rows(grid, n)
    return GoeritzData(
        unshaded_regions=regions,
        matrix=matrix,
        beta_s=shaded_graph.component_count,
        adjusted=adjusted_goeritz(matrix, shaded_graph.component_count),
    )


def adjusted_goeritz(matrix: IntMatrix, beta_s: int) -> IntMatrix:
    """Pad with beta_s - 1 zero rows and columns."""
    if beta_s < 1:
        raise ValueError("a shaded graph has at least one component")
    pad = beta_s - 1
    n = matrix.rows
    grid = [list(row) + [0] * pad for row in matrix.entries]
    grid.extend([0] * (n + pad) for _ in range(pad))
    return IntMatrix.from_rows(grid, n + pad)
