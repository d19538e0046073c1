"""Domino tilings as perfect matchings of a region's dual graph.

A domino is a dual edge, stored as its two cells in lexicographic
order, and a tiling is a frozenset of dominoes covering every cell of
the region exactly once.

Enumeration backtracks on the lexicographically smallest uncovered
cell, trying its right partner before its upper partner.  That fixes a
canonical order of tilings which everything downstream reuses (flip
graph node ids, serialized output), so runs are reproducible.

Counting never enumerates: it sweeps the bounding box cell by cell with
a broken-profile bitmask recording which cells of the current window
are already covered, so boards far beyond enumeration range stay exact
(Python integers keep the counts arbitrary precision).
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Iterator

from .errors import InvalidMoveError, NumericInstabilityError
from .surface import Cell, Region, Vertex, cells_around

Domino = tuple[Cell, Cell]
Tiling = frozenset  # frozenset[Domino]


def domino(a: Cell, b: Cell) -> Domino:
    """Canonical form of a domino: lexicographically smaller cell first."""
    return (a, b) if a <= b else (b, a)


def partner_map(tiling: Tiling) -> dict[Cell, Cell]:
    """Map each covered cell to the other cell of its domino."""
    partner: dict[Cell, Cell] = {}
    for a, b in tiling:
        partner[a] = b
        partner[b] = a
    return partner


def is_valid_tiling(region: Region, tiling: Tiling) -> bool:
    """True when the dominoes form a perfect matching of the region."""
    covered: set[Cell] = set()
    for d in tiling:
        if not (isinstance(d, tuple) and len(d) == 2):
            return False
        a, b = d
        if a not in region.cells or b not in region.cells:
            return False
        if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
            return False
        if a in covered or b in covered:
            return False
        covered.add(a)
        covered.add(b)
    return covered == set(region.cells)


def iter_tilings(region: Region) -> Iterator[Tiling]:
    """Yield every tiling once, in canonical backtracking order."""
    order = sorted(region.cells)
    if len(order) % 2:
        return
    cells = region.cells
    covered: set[Cell] = set()
    chosen: list[Domino] = []

    def extend(start: int) -> Iterator[Tiling]:
        idx = start
        while idx < len(order) and order[idx] in covered:
            idx += 1
        if idx == len(order):
            yield frozenset(chosen)
            return
        cell = order[idx]
        x, y = cell
        for partner in ((x + 1, y), (x, y + 1)):
            if partner in cells and partner not in covered:
                covered.add(cell)
                covered.add(partner)
                chosen.append((cell, partner))
                yield from extend(idx + 1)
                chosen.pop()
                covered.discard(cell)
                covered.discard(partner)

    yield from extend(0)


def enumerate_tilings(region: Region) -> list[Tiling]:
    """All tilings of the region in canonical order (empty if untileable)."""
    return list(iter_tilings(region))


def first_tiling(region: Region) -> Tiling | None:
    """The canonically first tiling, or None when the region is untileable."""
    return next(iter_tilings(region), None)


def count_tilings(region: Region) -> int:
    """Exact number of tilings via a broken-profile bitmask sweep."""
    cells = region.cells
    if len(cells) % 2:
        return 0
    x0, y0, x1, y1 = region.bounds
    w, h = x1 - x0 + 1, y1 - y0 + 1
    if w <= h:
        points = [(x - x0, y - y0) for x, y in cells]
    else:
        # sweep along the narrow axis so the mask stays small
        points = [(y - y0, x - x0) for x, y in cells]
        w, h = h, w
    n = w * h
    present = bytearray(n)
    for x, y in points:
        present[y * w + x] = 1
    top = 1 << (w - 1)
    full = (1 << w) - 1
    start = 0
    for j in range(w):
        if not present[j]:
            start |= 1 << j
    dp: dict[int, int] = {start: 1}
    for p in range(n):
        q = p + w
        enter = 0 if q < n and present[q] else top
        vertical_ok = q < n and present[q]
        last_in_row = (p + 1) % w == 0
        ndp: dict[int, int] = defaultdict(int)
        for mask, ways in dp.items():
            if mask & 1:
                ndp[(mask >> 1) | enter] += ways
            else:
                if not last_in_row and not (mask & 2):
                    ndp[((mask | 2) >> 1) | enter] += ways
                if vertical_ok:
                    ndp[(mask >> 1) | top] += ways
        dp = ndp
    return dp.get(full, 0)


def count_rectangle_closed_form(m: int, n: int) -> int:
    """Tiling count of an m-by-n rectangle by the classic trigonometric
    product, rounded to the nearest integer.

    The product runs over j = 1..ceil(m/2) and k = 1..ceil(n/2) of
    4 (cos^2(pi j / (m+1)) + cos^2(pi k / (n+1))).
    """
    if m < 1 or n < 1:
        raise ValueError(f"rectangle dimensions must be positive, got {m}x{n}")
    product = 1.0
    for j in range(1, (m + 1) // 2 + 1):
        cj = math.cos(math.pi * j / (m + 1)) ** 2
        for k in range(1, (n + 1) // 2 + 1):
            ck = math.cos(math.pi * k / (n + 1)) ** 2
            product *= 4.0 * (cj + ck)
    # past 2**53 the float grid is coarser than 1, so a clean rounding
    # residue certifies nothing
    if not math.isfinite(product) or abs(product) >= 2.0 ** 53:
        raise NumericInstabilityError(
            f"product for {m}x{n} exceeds float integer precision")
    nearest = round(product)
    if abs(product - nearest) > 1e-6 * max(1.0, abs(product)):
        raise NumericInstabilityError(
            f"product {product!r} for {m}x{n} does not round cleanly")
    return int(nearest)


def count_aztec_closed_form(n: int) -> int:
    """Tiling count of the order-n Aztec diamond: 2^(n(n+1)/2)."""
    if n < 1:
        raise ValueError(f"aztec order must be positive, got {n}")
    return 2 ** (n * (n + 1) // 2)


def _flip_kind(region: Region, partner: dict[Cell, Cell], anchor: Vertex) -> str | None:
    """'h' if the 2x2 block at anchor holds two horizontal dominoes,
    'v' for two vertical ones, None when the anchor is not flippable."""
    ll, lr, ul, ur = cells_around(anchor)
    if ll not in region.cells or ur not in region.cells:
        return None
    if lr not in region.cells or ul not in region.cells:
        return None
    if partner.get(ll) == lr and partner.get(ul) == ur:
        return "h"
    if partner.get(ll) == ul and partner.get(lr) == ur:
        return "v"
    return None


def available_flips(region: Region, tiling: Tiling) -> list[Vertex]:
    """Anchors of all 2x2 blocks covered by two parallel dominoes, in
    lexicographic order."""
    partner = partner_map(tiling)
    return [v for v in sorted(region.interior_vertices)
            if _flip_kind(region, partner, v) is not None]


def apply_flip(region: Region, tiling: Tiling, anchor: Vertex) -> Tiling:
    """Rotate the 2x2 block at the anchor a quarter turn."""
    partner = partner_map(tiling)
    kind = _flip_kind(region, partner, anchor)
    if kind is None:
        raise InvalidMoveError(f"vertex {anchor} is not a flippable anchor")
    ll, lr, ul, ur = cells_around(anchor)
    if kind == "h":
        old = {domino(ll, lr), domino(ul, ur)}
        new = {domino(ll, ul), domino(lr, ur)}
    else:
        old = {domino(ll, ul), domino(lr, ur)}
        new = {domino(ll, lr), domino(ul, ur)}
    return frozenset((tiling - old) | new)


def tiling_to_json(tiling: Tiling) -> dict:
    """Canonical JSON form: dominoes sorted lexicographically."""
    return {"dominoes": [[[a[0], a[1]], [b[0], b[1]]] for a, b in sorted(tiling)]}


def tiling_from_json(data: object) -> Tiling:
    if not isinstance(data, dict) or "dominoes" not in data:
        raise ValueError("tiling JSON must be an object with a 'dominoes' list")
    raw = data["dominoes"]
    if not isinstance(raw, list):
        raise ValueError("'dominoes' must be a list")
    dominoes = []
    for item in raw:
        if (not isinstance(item, (list, tuple)) or len(item) != 2
                or not all(isinstance(cell, (list, tuple)) and len(cell) == 2
                           and all(isinstance(c, int) for c in cell)
                           for cell in item)):
            raise ValueError(f"bad domino entry {item!r}")
        a, b = (tuple(item[0]), tuple(item[1]))
        dominoes.append(domino(a, b))
    return frozenset(dominoes)
