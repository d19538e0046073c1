"""Flip-graph diameters: exhaustive search, level sums, closed forms.

The level sum over all region vertices bounds every flip distance from
above (no column of a filling shape can exceed its vertex's level) and
is attained whenever each ring of the region tours as a dual cycle with
tileable leftovers, which covers rectangles and Aztec diamonds.  The
closed forms specialize that sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DominoError, UntileableError
from .flipgraph import (DEFAULT_NODE_BUDGET, FlipGraph, bfs_distances,
                        build_flip_graph)
from .surface import Region, ring_decomposition
from .tiling import Tiling


@dataclass
class DiameterReport:
    value: int
    method: str
    realizers: tuple[Tiling, Tiling] | None = None


def diameter_bfs(region: Region,
                 budget: int = DEFAULT_NODE_BUDGET) -> DiameterReport:
    """Exact diameter by breadth-first search from every tiling."""
    graph = build_flip_graph(region, budget)
    return diameter_of_graph(graph)


def diameter_of_graph(graph: FlipGraph) -> DiameterReport:
    """Exact diameter of an already built flip graph."""
    if not graph.nodes:
        raise UntileableError("region has no tiling")
    best = 0
    pair = (0, 0)
    for i in range(len(graph.nodes)):
        dist = bfs_distances(graph, i)
        for j, d in enumerate(dist):
            if d is None:
                raise DominoError(
                    "flip graph is disconnected; diameter undefined")
            if d > best:
                best = d
                pair = (i, j)
    return DiameterReport(best, "bfs",
                          (graph.nodes[pair[0]], graph.nodes[pair[1]]))


def diameter_levels(region: Region) -> int:
    """Sum of vertex levels: an upper bound for the diameter in general,
    the exact diameter for ring-cycled (Saturnian) regions."""
    decomposition = ring_decomposition(region)
    return sum(decomposition.levels.values())


def diameter_square_closed(n: int) -> int:
    """Closed form (n^3 - n) / 6 for the n-by-n square, n even."""
    if n < 2 or n % 2:
        raise ValueError(f"square side must be even and at least 2, got {n}")
    return (n ** 3 - n) // 6


def diameter_rectangle_closed(m: int, n: int) -> int:
    """Closed form for the m-by-n rectangle, m >= n, m*n even.

    Evaluates both the polynomial form and its defining sum
    sum_i (n - (2i-1))(m - (2i-1)) over i = 1..ceil(n/2) and insists
    they agree.
    """
    if n < 1 or m < n:
        raise ValueError(f"need m >= n >= 1, got m={m}, n={n}")
    if (m * n) % 2:
        raise ValueError(f"{m}x{n} has an odd cell count, no tilings exist")
    if n % 2 == 0:
        numerator = 3 * m * n * n - n ** 3 - 2 * n
    else:
        numerator = 3 * m * n * n - n ** 3 + n - 3 * m
    if numerator % 12:
        raise DominoError(f"closed form for {m}x{n} is not an integer")
    value = numerator // 12
    explicit = sum((n - (2 * i - 1)) * (m - (2 * i - 1))
                   for i in range(1, (n + 1) // 2 + 1))
    if value != explicit:
        raise DominoError(
            f"closed form {value} disagrees with its defining sum {explicit}")
    return value


def diameter_aztec_closed(n: int) -> int:
    """Closed form n^3/3 + n^2/2 + n/6 for the order-n Aztec diamond,
    which is the sum of the first n squares."""
    if n < 1:
        raise ValueError(f"aztec order must be positive, got {n}")
    return n * (n + 1) * (2 * n + 1) // 6
