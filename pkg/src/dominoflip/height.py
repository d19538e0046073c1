"""Integer height labels on region vertices induced by a tiling.

Every unit edge gets a positive traversal direction: the one keeping
the black cell on its right, so edges run clockwise around black cells
and counterclockwise around white ones.  Walking an edge positively
raises the label by 1 when no domino crosses the edge, and lowers it by
3 when the edge lies inside a domino.  Labels are anchored at 0 on the
base vertex, the lexicographically smallest boundary vertex.

On a simply connected region this pins a unique labeling per tiling.
Two tilings always agree on boundary vertices, a flip moves exactly one
label (its anchor's) by 4, and the pointwise max and min of two
labelings are again labelings of tilings.  That last fact makes the set
of tilings a distributive lattice whose extremes realize the flip-graph
diameter; it also yields geodesics, by flipping monotonically up to the
pointwise max and back down.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .errors import (DominoError, InvalidHeightError, UnsupportedRegionError,
                     UntileableError)
from .surface import Region, Vertex, is_black, is_simply_connected
from .tiling import (Domino, Tiling, apply_flip, available_flips, domino,
                     first_tiling, is_valid_tiling)

HeightValues = dict[Vertex, int]

EdgeInfo = tuple[Vertex, int, Domino | None]  # neighbor, sign of u->nb, crossing pair


def base_vertex(region: Region) -> Vertex:
    """The canonical base: lexicographically smallest boundary vertex."""
    return min(region.boundary_vertices)


def _edge_sign(region: Region, u: Vertex, v: Vertex) -> int:
    """+1 when u -> v is the positive traversal (black cell on the right)."""
    dx, dy = v[0] - u[0], v[1] - u[1]
    if dx == 1:
        right, left = (u[0], u[1] - 1), (u[0], u[1])
    elif dx == -1:
        right, left = (v[0], v[1]), (v[0], v[1] - 1)
    elif dy == 1:
        right, left = (u[0], u[1]), (u[0] - 1, u[1])
    else:
        right, left = (v[0] - 1, v[1]), (v[0], v[1])
    if right in region.cells:
        return 1 if is_black(right) else -1
    return -1 if is_black(left) else 1


def _flank_pair(region: Region, u: Vertex, v: Vertex):
    """The domino that would cross edge {u, v}, or None on the boundary."""
    if u[1] == v[1]:
        x = min(u[0], v[0])
        a, b = (x, u[1] - 1), (x, u[1])
    else:
        y = min(u[1], v[1])
        a, b = (u[0] - 1, y), (u[0], y)
    if a in region.cells and b in region.cells:
        return domino(a, b)
    return None


@lru_cache(maxsize=None)
def _vertex_adjacency(region: Region) -> dict[Vertex, tuple[EdgeInfo, ...]]:
    """Per vertex: (neighbor, orientation sign, crossing domino) triples."""
    adj: dict[Vertex, list[EdgeInfo]] = {v: [] for v in region.vertex_set}
    seen: set[tuple[Vertex, Vertex]] = set()
    for cell in region.cells:
        x, y = cell
        corners = ((x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1))
        for i in range(4):
            u, v = corners[i], corners[(i + 1) % 4]
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            a, b = key
            sign = _edge_sign(region, a, b)
            flank = _flank_pair(region, a, b)
            adj[a].append((b, sign, flank))
            adj[b].append((a, -sign, flank))
    return {v: tuple(edges) for v, edges in adj.items()}


def height_function(region: Region, tiling: Tiling) -> HeightValues:
    """Height labels of every region vertex under the given tiling."""
    if not is_simply_connected(region):
        raise UnsupportedRegionError(
            "height labels need a simply connected region")
    if not is_valid_tiling(region, tiling):
        raise ValueError("not a valid tiling of the region")
    adj = _vertex_adjacency(region)
    base = base_vertex(region)
    values: HeightValues = {base: 0}
    queue = deque([base])
    while queue:
        u = queue.popleft()
        hu = values[u]
        for v, sign, flank in adj[u]:
            if flank is not None and flank in tiling:
                continue
            if v not in values:
                values[v] = hu + sign
                queue.append(v)
    if len(values) != len(region.vertex_set):
        raise DominoError("height propagation failed to reach every vertex")
    _check_edge_rules(region, tiling, values)
    return values


def _check_edge_rules(region: Region, tiling: Tiling, values: HeightValues) -> None:
    """Every positively traversed edge must step by +1 (free) or -3 (crossed)."""
    for u, edges in _vertex_adjacency(region).items():
        for v, sign, flank in edges:
            if sign != 1:
                continue
            expected = -3 if (flank is not None and flank in tiling) else 1
            if values[v] - values[u] != expected:
                raise DominoError(
                    f"edge rule violated on {u}->{v}: "
                    f"got {values[v] - values[u]}, expected {expected}")


def distance_height(region: Region, t1: Tiling, t2: Tiling) -> int:
    """Flip distance as a quarter of the summed label differences."""
    h1 = height_function(region, t1)
    h2 = height_function(region, t2)
    total = sum(abs(h1[v] - h2[v]) for v in h1)
    if total % 4:
        raise DominoError(f"height difference sum {total} is not divisible by 4")
    return total // 4


def tiling_from_height(region: Region, values: HeightValues) -> Tiling:
    """The unique tiling whose dominoes cross exactly the -3 edges."""
    if set(values) != set(region.vertex_set):
        raise InvalidHeightError("labels must cover exactly the region vertices")
    dominoes: set = set()
    for u, edges in _vertex_adjacency(region).items():
        for v, sign, flank in edges:
            if sign != 1:
                continue
            step = values[v] - values[u]
            if step == 1:
                continue
            if step == -3 and flank is not None:
                dominoes.add(flank)
            else:
                raise InvalidHeightError(
                    f"edge {u}->{v} steps by {step}; edge rules allow +1 or -3")
    tiling = frozenset(dominoes)
    if not is_valid_tiling(region, tiling):
        raise InvalidHeightError("labels do not describe a perfect matching")
    return tiling


def join(region: Region, t1: Tiling, t2: Tiling) -> Tiling:
    """Tiling of the pointwise maximum of the two height labelings."""
    h1 = height_function(region, t1)
    h2 = height_function(region, t2)
    return tiling_from_height(region, {v: max(h1[v], h2[v]) for v in h1})


def meet(region: Region, t1: Tiling, t2: Tiling) -> Tiling:
    """Tiling of the pointwise minimum of the two height labelings."""
    h1 = height_function(region, t1)
    h2 = height_function(region, t2)
    return tiling_from_height(region, {v: min(h1[v], h2[v]) for v in h1})


def _anchor_value(region: Region, tiling: Tiling, values: HeightValues,
                  anchor: Vertex) -> int:
    """Height at the anchor read off one neighbor through the new tiling."""
    v, sign, flank = _vertex_adjacency(region)[anchor][0]
    step = -3 if (flank is not None and flank in tiling) else 1
    return values[v] - sign * step


def _monotone_sweep(region: Region, tiling: Tiling, direction: int) -> Tiling:
    """Apply height-raising (direction=+1) or -lowering flips until stuck,
    rescanning anchors lexicographically after every move."""
    values = height_function(region, tiling)
    current = tiling
    while True:
        for anchor in available_flips(region, current):
            flipped = apply_flip(region, current, anchor)
            new_value = _anchor_value(region, flipped, values, anchor)
            if (new_value - values[anchor]) * direction > 0:
                current = flipped
                values[anchor] = new_value
                break
        else:
            return current


def extremal_tilings(region: Region) -> tuple[Tiling, Tiling]:
    """The lattice-minimal and -maximal tilings (t_min, t_max)."""
    if not is_simply_connected(region):
        raise UnsupportedRegionError(
            "extremal tilings need a simply connected region")
    seed = first_tiling(region)
    if seed is None:
        raise UntileableError("region has no tiling")
    return (_monotone_sweep(region, seed, -1), _monotone_sweep(region, seed, +1))


def geodesic(region: Region, t1: Tiling, t2: Tiling) -> list[Vertex]:
    """A shortest flip sequence from t1 to t2, routed through the
    pointwise-max tiling with monotone heights on each leg.

    Each step picks the lexicographically smallest flippable anchor
    whose label moves toward the leg target, so the path is
    deterministic.
    """
    h1 = height_function(region, t1)
    h2 = height_function(region, t2)
    mid = {v: max(h1[v], h2[v]) for v in h1}
    moves: list[Vertex] = []
    current = t1
    values = dict(h1)
    for target in (mid, h2):
        while values != target:
            for anchor in available_flips(region, current):
                have, want = values[anchor], target[anchor]
                if have == want:
                    continue
                flipped = apply_flip(region, current, anchor)
                new_value = _anchor_value(region, flipped, values, anchor)
                if (new_value - have) * (want - have) > 0:
                    current = flipped
                    values[anchor] = new_value
                    moves.append(anchor)
                    break
            else:
                raise DominoError("geodesic search stalled; inputs inconsistent")
    return moves


def height_to_json(region: Region, values: HeightValues) -> dict:
    base = base_vertex(region)
    return {"base": [base[0], base[1]],
            "values": [[x, y, values[(x, y)]] for x, y in sorted(values)]}


def height_from_json(data: object) -> HeightValues:
    if not isinstance(data, dict) or "values" not in data:
        raise ValueError("height JSON must be an object with a 'values' list")
    values: HeightValues = {}
    for item in data["values"]:
        if (not isinstance(item, (list, tuple)) or len(item) != 3
                or not all(isinstance(c, int) for c in item)):
            raise ValueError(f"bad height entry {item!r}")
        values[(item[0], item[1])] = item[2]
    return values
