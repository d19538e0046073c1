import pytest
from hypothesis import given
from hypothesis import strategies as st

from dominoflip import (InvalidHeightError, UnsupportedRegionError,
                        apply_flip, available_flips, base_vertex,
                        build_flip_graph, bfs_distances, distance_height,
                        enumerate_tilings, extremal_tilings, geodesic,
                        height_function, join, make_aztec, make_from_cells,
                        make_holed_square, make_rectangle, meet,
                        tiling_from_height, tiling_from_json)

from conftest import load_tiling

# an L-shaped 16-cell region with a reference tiling and the height
# labels it must produce (base vertex (0, 0))
LSHAPE = make_from_cells([
    (0, 0), (1, 0), (2, 0), (3, 0),
    (0, 1), (1, 1), (2, 1), (3, 1), (4, 1),
    (1, 2), (2, 2), (3, 2), (4, 2),
    (1, 3), (2, 3), (3, 3),
])
LSHAPE_TILING = tiling_from_json({"dominoes": [
    [[0, 0], [1, 0]], [[2, 0], [3, 0]], [[0, 1], [1, 1]], [[2, 1], [3, 1]],
    [[4, 1], [4, 2]], [[1, 2], [2, 2]], [[3, 2], [3, 3]], [[1, 3], [2, 3]],
]})
LSHAPE_HEIGHTS = {
    (0, 0): 0, (1, 0): -1, (2, 0): 0, (3, 0): -1, (4, 0): 0,
    (0, 1): 1, (1, 1): 2, (2, 1): 1, (3, 1): 2, (4, 1): 1, (5, 1): 2,
    (0, 2): 0, (1, 2): -1, (2, 2): 0, (3, 2): -1, (4, 2): 0, (5, 2): 3,
    (1, 3): -2, (2, 3): -3, (3, 3): -2, (4, 3): 1, (5, 3): 2,
    (1, 4): -1, (2, 4): 0, (3, 4): -1, (4, 4): 0,
}


class TestHeightFunction:
    def test_2x2_centers_differ_by_four(self):
        r = make_rectangle(2, 2)
        horizontal, vertical = enumerate_tilings(r)
        hh = height_function(r, horizontal)
        hv = height_function(r, vertical)
        assert abs(hh[(1, 1)] - hv[(1, 1)]) == 4
        assert hh[base_vertex(r)] == 0

    def test_lshape_reference_values(self):
        assert height_function(LSHAPE, LSHAPE_TILING) == LSHAPE_HEIGHTS

    def test_boundary_values_tiling_independent(self):
        r = make_rectangle(4, 2)
        tilings = enumerate_tilings(r)
        reference = height_function(r, tilings[0])
        for t in tilings[1:]:
            h = height_function(r, t)
            for v in r.boundary_vertices:
                assert h[v] == reference[v]

    def test_rejects_holed_region(self):
        r = make_holed_square(3)
        t = enumerate_tilings(r)[0]
        with pytest.raises(UnsupportedRegionError):
            height_function(r, t)

    def test_rejects_invalid_tiling(self):
        r = make_rectangle(2, 2)
        with pytest.raises(ValueError):
            height_function(r, frozenset())

    def test_height_parity_fixed_per_vertex(self):
        r = make_rectangle(4, 3)
        tilings = enumerate_tilings(r)
        reference = height_function(r, tilings[0])
        for t in tilings[1:]:
            h = height_function(r, t)
            for v, value in h.items():
                assert value % 4 == reference[v] % 4


class TestDistance:
    def test_zero_on_equal(self):
        r = make_rectangle(4, 3)
        t = enumerate_tilings(r)[5]
        assert distance_height(r, t, t) == 0

    def test_2x2_pair(self):
        r = make_rectangle(2, 2)
        a, b = enumerate_tilings(r)
        assert distance_height(r, a, b) == 1

    def test_6x2_reference_pair(self):
        r = make_rectangle(6, 2)
        a = load_tiling("brick_6x2.json")
        b = load_tiling("staggered_6x2.json")
        assert distance_height(r, a, b) == 5

    def test_matches_bfs_on_4x3(self):
        r = make_rectangle(4, 3)
        g = build_flip_graph(r)
        for i, t1 in enumerate(g.nodes):
            dist = bfs_distances(g, i)
            for j, t2 in enumerate(g.nodes):
                assert distance_height(r, t1, t2) == dist[j]


class TestBijection:
    def test_round_trip_over_4x3(self):
        r = make_rectangle(4, 3)
        for t in enumerate_tilings(r):
            assert tiling_from_height(r, height_function(r, t)) == t

    def test_corrupted_value_rejected(self):
        r = make_rectangle(4, 3)
        h = height_function(r, enumerate_tilings(r)[0])
        v = next(iter(r.interior_vertices))
        h[v] += 1
        with pytest.raises(InvalidHeightError):
            tiling_from_height(r, h)

    def test_missing_vertex_rejected(self):
        r = make_rectangle(2, 2)
        h = height_function(r, enumerate_tilings(r)[0])
        h.pop((1, 1))
        with pytest.raises(InvalidHeightError):
            tiling_from_height(r, h)


class TestLattice:
    def test_join_idempotent(self):
        r = make_rectangle(4, 3)
        t = enumerate_tilings(r)[3]
        assert join(r, t, t) == t
        assert meet(r, t, t) == t

    def test_join_is_pointwise_max(self):
        r = make_rectangle(4, 4)
        tilings = enumerate_tilings(r)
        a, b = tilings[7], tilings[20]
        hj = height_function(r, join(r, a, b))
        ha, hb = height_function(r, a), height_function(r, b)
        assert hj == {v: max(ha[v], hb[v]) for v in ha}

    def test_geodesic_splits_through_join_and_meet(self):
        r = make_rectangle(4, 3)
        g = build_flip_graph(r)
        for i, a in enumerate(g.nodes):
            dist = bfs_distances(g, i)
            for b in g.nodes:
                up = join(r, a, b)
                down = meet(r, a, b)
                d = dist[g.node_index(b)]
                assert (distance_height(r, a, up)
                        + distance_height(r, up, b)) == d
                assert (distance_height(r, a, down)
                        + distance_height(r, down, b)) == d

    def test_meet_of_extremes(self):
        r = make_rectangle(4, 4)
        tmin, tmax = extremal_tilings(r)
        assert meet(r, tmin, tmax) == tmin
        assert join(r, tmin, tmax) == tmax


class TestExtremal:
    def test_2x2(self):
        r = make_rectangle(2, 2)
        tmin, tmax = extremal_tilings(r)
        assert {tmin, tmax} == set(enumerate_tilings(r))
        assert distance_height(r, tmin, tmax) == 1

    @pytest.mark.parametrize("region,spread", [
        (make_rectangle(4, 4), 10), (make_aztec(2), 5),
    ])
    def test_extreme_distance(self, region, spread):
        tmin, tmax = extremal_tilings(region)
        assert distance_height(region, tmin, tmax) == spread

    def test_independent_of_start(self):
        from dominoflip.height import _monotone_sweep
        r = make_rectangle(4, 3)
        ups = {_monotone_sweep(r, t, +1) for t in enumerate_tilings(r)}
        downs = {_monotone_sweep(r, t, -1) for t in enumerate_tilings(r)}
        assert len(ups) == 1 and len(downs) == 1

    def test_all_tilings_between_extremes(self):
        r = make_aztec(2)
        tmin, tmax = extremal_tilings(r)
        hmin = height_function(r, tmin)
        hmax = height_function(r, tmax)
        for t in enumerate_tilings(r):
            h = height_function(r, t)
            for v in h:
                assert hmin[v] <= h[v] <= hmax[v]


class TestGeodesic:
    def test_empty_on_equal(self):
        r = make_rectangle(4, 3)
        t = enumerate_tilings(r)[0]
        assert geodesic(r, t, t) == []

    def test_single_flip(self):
        r = make_rectangle(2, 2)
        a, b = enumerate_tilings(r)
        assert geodesic(r, a, b) == [(1, 1)]

    def test_6x2_reference_pair(self):
        r = make_rectangle(6, 2)
        a = load_tiling("brick_6x2.json")
        b = load_tiling("staggered_6x2.json")
        path = geodesic(r, a, b)
        assert len(path) == 5
        current = a
        for anchor in path:
            current = apply_flip(r, current, anchor)
        assert current == b


class TestJson:
    def test_round_trip(self):
        from dominoflip.height import height_from_json, height_to_json
        h = height_function(LSHAPE, LSHAPE_TILING)
        data = height_to_json(LSHAPE, h)
        assert data["base"] == [0, 0]
        assert data["values"] == sorted(data["values"])
        assert height_from_json(data) == h

    def test_rejects_malformed(self):
        from dominoflip.height import height_from_json
        with pytest.raises(ValueError):
            height_from_json({"values": [[0, 0]]})


class TestFlipLocality:
    @given(st.data())
    def test_flip_moves_one_label_by_four(self, data):
        regions = [make_rectangle(4, 3), make_rectangle(4, 4), make_aztec(2)]
        r = regions[data.draw(st.integers(0, len(regions) - 1))]
        tilings = enumerate_tilings(r)
        t = tilings[data.draw(st.integers(0, len(tilings) - 1))]
        flips = available_flips(r, t)
        if not flips:
            return
        anchor = flips[data.draw(st.integers(0, len(flips) - 1))]
        before = height_function(r, t)
        after = height_function(r, apply_flip(r, t, anchor))
        assert abs(after[anchor] - before[anchor]) == 4
        for v in before:
            if v != anchor:
                assert after[v] == before[v]
