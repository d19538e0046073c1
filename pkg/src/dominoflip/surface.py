"""Square-tiled regions of the integer grid.

A region is a finite set of unit cells.  A cell is named by its
lower-left corner ``(x, y)`` and occupies ``[x, x+1] x [y, y+1]``, so
its center sits at half-integer coordinates.  Cells are colored like a
chessboard, black when ``x + y`` is even, and two cells are
dual-adjacent when they share a unit edge (the cells are the vertices
of the dual graph).

The corner points of cells are the vertices of the region.  A vertex is
interior when all four cells around it are present; every other vertex
lies on the topological boundary of the union of cells.

Rings peel the region like an onion: the first ring holds every cell
touching the region's boundary, and removing it leaves a smaller region
to peel again.  The level of a vertex counts how many peels it survives
as an interior vertex, so boundary vertices sit at level 0 and the
vertices of level i are exactly those that first stop being interior
after i peels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

Cell = tuple[int, int]
Vertex = tuple[int, int]

DUAL_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def is_black(cell: Cell) -> bool:
    """Chessboard color of a cell; black cells have even coordinate sum."""
    return (cell[0] + cell[1]) % 2 == 0


def cell_corners(cell: Cell) -> tuple[Vertex, Vertex, Vertex, Vertex]:
    x, y = cell
    return ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))


def cells_around(vertex: Vertex) -> tuple[Cell, Cell, Cell, Cell]:
    """The four cell slots around a lattice vertex: ll, lr, ul, ur."""
    x, y = vertex
    return ((x - 1, y - 1), (x, y - 1), (x - 1, y), (x, y))


class Region:
    """Immutable set of grid cells with cached derived structure."""

    def __init__(self, cells: Iterable[Cell]):
        cellset = frozenset((int(x), int(y)) for x, y in cells)
        if not cellset:
            raise ValueError("a region needs at least one cell")
        self.cells = cellset

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Region) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"Region({len(self.cells)} cells)"

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells

    def neighbors(self, cell: Cell) -> list[Cell]:
        """Dual-graph neighbors of a cell, in a fixed scan order."""
        x, y = cell
        return [c for c in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))
                if c in self.cells]

    @cached_property
    def vertex_set(self) -> frozenset[Vertex]:
        return frozenset(v for c in self.cells for v in cell_corners(c))

    @cached_property
    def interior_vertices(self) -> frozenset[Vertex]:
        cells = self.cells
        return frozenset(v for v in self.vertex_set
                         if all(c in cells for c in cells_around(v)))

    @cached_property
    def boundary_vertices(self) -> frozenset[Vertex]:
        return self.vertex_set - self.interior_vertices

    @cached_property
    def bounds(self) -> tuple[int, int, int, int]:
        """(min_x, min_y, max_x, max_y) over cell coordinates."""
        xs = [c[0] for c in self.cells]
        ys = [c[1] for c in self.cells]
        return min(xs), min(ys), max(xs), max(ys)

    @cached_property
    def vertex_rows(self) -> dict[int, list[int]]:
        """Sorted x coordinates of vertices, grouped by row y."""
        rows: dict[int, list[int]] = {}
        for x, y in self.vertex_set:
            rows.setdefault(y, []).append(x)
        for xs in rows.values():
            xs.sort()
        return rows


def make_rectangle(m: int, n: int) -> Region:
    """An m-wide, n-tall rectangle of cells with lower-left corner at the origin."""
    if m < 1 or n < 1:
        raise ValueError(f"rectangle dimensions must be positive, got {m}x{n}")
    return Region((x, y) for x in range(m) for y in range(n))


def make_aztec(n: int) -> Region:
    """Aztec diamond of order n, centered on the origin.

    Rows have 2, 4, ..., 2n, 2n, ..., 4, 2 cells; a cell (x, y) belongs
    to the diamond when |x + 1/2| + |y + 1/2| <= n.
    """
    if n < 1:
        raise ValueError(f"aztec order must be positive, got {n}")
    span = range(-n, n)
    return Region((x, y) for x in span for y in span
                  if abs(2 * x + 1) + abs(2 * y + 1) <= 2 * n)


def make_holed_square(k: int) -> Region:
    """A k-by-k square with the central cell removed (k odd, k >= 3)."""
    if k < 3 or k % 2 == 0:
        raise ValueError(f"holed square needs an odd side of at least 3, got {k}")
    mid = k // 2
    return Region((x, y) for x in range(k) for y in range(k) if (x, y) != (mid, mid))


def make_from_cells(cells: Iterable[Cell]) -> Region:
    """Region from an explicit cell list; duplicates collapse."""
    cells = list(cells)
    if not cells:
        raise ValueError("cell list is empty")
    return Region(cells)


def _connected(cells: frozenset[Cell] | set[Cell], seeds: Iterable[Cell]) -> set[Cell]:
    """Cells reachable from the seeds by unit steps inside the given set."""
    seen = set()
    queue = deque(seeds)
    for s in queue:
        seen.add(s)
    while queue:
        x, y = queue.popleft()
        for dx, dy in DUAL_STEPS:
            nb = (x + dx, y + dy)
            if nb in cells and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return seen


def is_simply_connected(region: Region) -> bool:
    """True when the cells are edge-connected and enclose no hole.

    The hole test flood-fills the complement of the cell set inside the
    bounding box padded by one: the region is hole-free exactly when
    every complement cell is reachable from the outside.
    """
    cells = region.cells
    start = next(iter(cells))
    if len(_connected(cells, [start])) != len(cells):
        return False
    x0, y0, x1, y1 = region.bounds
    box = {(x, y)
           for x in range(x0 - 1, x1 + 2)
           for y in range(y0 - 1, y1 + 2)}
    complement = box - cells
    outside = _connected(complement, [(x0 - 1, y0 - 1)])
    return len(outside) == len(complement)


@dataclass(frozen=True)
class RingDecomposition:
    """Boundary peels of a region plus the induced vertex levels."""

    rings: tuple[frozenset[Cell], ...]
    levels: dict[Vertex, int]

    @cached_property
    def level_classes(self) -> dict[int, frozenset[Vertex]]:
        classes: dict[int, set[Vertex]] = {}
        for v, lev in self.levels.items():
            classes.setdefault(lev, set()).add(v)
        return {lev: frozenset(vs) for lev, vs in classes.items()}


def ring_decomposition(region: Region) -> RingDecomposition:
    """Peel rings off the region and record when each vertex surfaces.

    A vertex gets level i at the first peel depth i where it is no
    longer an interior vertex of what remains (possibly because its
    cells are gone altogether).
    """
    remaining = set(region.cells)
    unassigned = set(region.vertex_set)
    levels: dict[Vertex, int] = {}
    rings: list[frozenset[Cell]] = []
    depth = 0
    while remaining:
        corners = {v for c in remaining for v in cell_corners(c)}
        interior = {v for v in corners
                    if all(c in remaining for c in cells_around(v))}
        for v in unassigned - interior:
            levels[v] = depth
        unassigned &= interior
        ring = frozenset(c for c in remaining
                         if any(v not in interior for v in cell_corners(c)))
        rings.append(ring)
        remaining -= ring
        depth += 1
    # vertices interior right up to the last peel surface only now
    for v in unassigned:
        levels[v] = depth
    return RingDecomposition(tuple(rings), levels)


def _has_covering_cycle(cells: frozenset[Cell]) -> bool:
    """True when the cells admit a closed dual-graph tour visiting each once."""
    n = len(cells)
    if n < 4 or n % 2:
        return False
    adj = {c: [nb for nb in ((c[0] + 1, c[1]), (c[0] - 1, c[1]),
                             (c[0], c[1] + 1), (c[0], c[1] - 1)) if nb in cells]
           for c in cells}
    if any(len(nbs) < 2 for nbs in adj.values()):
        return False
    start = min(cells)
    path = [start]
    visited = {start}
    iters = [iter(adj[start])]
    while iters:
        try:
            nb = next(iters[-1])
        except StopIteration:
            iters.pop()
            visited.discard(path.pop())
            continue
        if nb == start and len(path) == n:
            return True
        if nb not in visited:
            visited.add(nb)
            path.append(nb)
            iters.append(iter(adj[nb]))
    return False


def is_saturnian(region: Region) -> bool:
    """True when every ring tours as a single dual cycle and every peel
    leaves a tileable (or empty) remainder."""
    from .tiling import count_tilings  # local import, tiling depends on surface

    decomposition = ring_decomposition(region)
    remaining = set(region.cells)
    for ring in decomposition.rings:
        if not _has_covering_cycle(ring):
            return False
        remaining -= ring
        if remaining and count_tilings(Region(remaining)) == 0:
            return False
    return True


def region_to_json(region: Region) -> dict:
    """Canonical JSON form: cells sorted lexicographically."""
    return {"cells": [[x, y] for x, y in sorted(region.cells)]}


def region_from_json(data: object) -> Region:
    if not isinstance(data, dict) or "cells" not in data:
        raise ValueError("region JSON must be an object with a 'cells' list")
    raw = data["cells"]
    if not isinstance(raw, list) or not raw:
        raise ValueError("region JSON needs a non-empty 'cells' list")
    cells = []
    for item in raw:
        if (not isinstance(item, (list, tuple)) or len(item) != 2
                or not all(isinstance(c, int) for c in item)):
            raise ValueError(f"bad cell entry {item!r}: expected [x, y] integers")
        cells.append((item[0], item[1]))
    return make_from_cells(cells)
