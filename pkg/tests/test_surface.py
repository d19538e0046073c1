import pytest
from hypothesis import given
from hypothesis import strategies as st

from dominoflip import (Region, is_black, is_saturnian, is_simply_connected,
                        make_aztec, make_from_cells, make_holed_square,
                        make_rectangle, region_from_json, region_to_json,
                        ring_decomposition)

cells_strategy = st.sets(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=12)


class TestConstructors:
    def test_rectangle_2x2(self):
        r = make_rectangle(2, 2)
        assert len(r.cells) == 4
        assert len(r.vertex_set) == 9
        assert len(r.interior_vertices) == 1

    def test_rectangle_4x3(self):
        r = make_rectangle(4, 3)
        assert len(r.cells) == 12
        assert len(r.vertex_set) == 20
        assert len(r.interior_vertices) == 6

    def test_rectangle_1x1(self):
        r = make_rectangle(1, 1)
        assert len(r.cells) == 1
        assert len(r.interior_vertices) == 0

    @pytest.mark.parametrize("m,n", [(0, 3), (3, 0), (-1, 2)])
    def test_rectangle_rejects_bad_dims(self, m, n):
        with pytest.raises(ValueError):
            make_rectangle(m, n)

    @pytest.mark.parametrize("n,cells,interior", [
        (1, 4, 1), (2, 12, 5), (4, 40, 25),
    ])
    def test_aztec_examples(self, n, cells, interior):
        r = make_aztec(n)
        assert len(r.cells) == cells
        assert len(r.interior_vertices) == interior

    def test_aztec_formulas_up_to_six(self):
        for n in range(1, 7):
            r = make_aztec(n)
            assert len(r.cells) == 2 * n * (n + 1)
            assert len(r.interior_vertices) == 2 * n * n - 2 * n + 1

    def test_aztec_rejects_zero(self):
        with pytest.raises(ValueError):
            make_aztec(0)

    @pytest.mark.parametrize("k,cells", [(3, 8), (5, 24), (7, 48)])
    def test_holed_square_sizes(self, k, cells):
        assert len(make_holed_square(k).cells) == cells

    @pytest.mark.parametrize("k", [1, 2, 4])
    def test_holed_square_rejects(self, k):
        with pytest.raises(ValueError):
            make_holed_square(k)

    def test_from_cells_single(self):
        assert len(make_from_cells([(0, 0)]).cells) == 1

    def test_from_cells_empty_rejected(self):
        with pytest.raises(ValueError):
            make_from_cells([])

    def test_from_cells_matches_rectangle(self):
        r = make_rectangle(3, 2)
        assert make_from_cells(sorted(r.cells)) == r

    def test_mutilated_chessboard(self):
        cells = [(x, y) for x in range(8) for y in range(8)
                 if (x, y) not in ((0, 0), (7, 7))]
        assert len(make_from_cells(cells).cells) == 62

    @given(cells_strategy)
    def test_from_cells_deduplicates(self, cells):
        r = make_from_cells(list(cells) + list(cells))
        assert r.cells == frozenset(cells)


class TestVertexCounts:
    @given(st.integers(1, 6), st.integers(1, 6))
    def test_rectangle_vertex_formulas(self, m, n):
        r = make_rectangle(m, n)
        assert len(r.vertex_set) == (m + 1) * (n + 1)
        assert len(r.interior_vertices) == (m - 1) * (n - 1)

    @given(cells_strategy)
    def test_coloring_is_proper(self, cells):
        r = make_from_cells(cells)
        for c in r.cells:
            for nb in r.neighbors(c):
                assert is_black(c) != is_black(nb)


class TestSimplyConnected:
    def test_rectangle(self):
        assert is_simply_connected(make_rectangle(4, 3))

    def test_holed_square(self):
        assert not is_simply_connected(make_holed_square(3))

    def test_disconnected(self):
        assert not is_simply_connected(make_from_cells([(0, 0), (2, 2)]))

    def test_mutilated_chessboard_has_no_hole(self):
        cells = [(x, y) for x in range(8) for y in range(8)
                 if (x, y) not in ((0, 0), (7, 7))]
        assert is_simply_connected(make_from_cells(cells))


class TestRings:
    def test_square_6_rings(self):
        rd = ring_decomposition(make_rectangle(6, 6))
        assert [len(ring) for ring in rd.rings] == [20, 12, 4]

    def test_rings_partition_cells(self):
        for r in (make_rectangle(6, 6), make_aztec(3), make_holed_square(5)):
            rd = ring_decomposition(r)
            assert sum(len(ring) for ring in rd.rings) == len(r.cells)
            seen = set()
            for ring in rd.rings:
                assert not (ring & seen)
                seen |= ring

    def test_square_2_levels(self):
        rd = ring_decomposition(make_rectangle(2, 2))
        assert [len(ring) for ring in rd.rings] == [4]
        assert rd.level_classes[1] == frozenset({(1, 1)})

    def test_aztec_2_levels(self):
        r = make_aztec(2)
        rd = ring_decomposition(r)
        assert rd.rings[0] == r.cells
        assert rd.level_classes[1] == r.interior_vertices
        assert sum(i * len(vs) for i, vs in rd.level_classes.items()) == 5

    def test_boundary_vertices_are_level_zero(self):
        for r in (make_rectangle(5, 4), make_aztec(3)):
            rd = ring_decomposition(r)
            assert rd.level_classes[0] == r.boundary_vertices

    def test_levels_drop_by_one_after_peeling(self):
        for r in (make_rectangle(6, 6), make_aztec(4)):
            rd = ring_decomposition(r)
            inner = Region(r.cells - rd.rings[0])
            rd_inner = ring_decomposition(inner)
            for v, lev in rd_inner.levels.items():
                assert rd.levels[v] == lev + 1


class TestSaturnian:
    @pytest.mark.parametrize("region,expected", [
        (make_rectangle(4, 4), True),
        (make_rectangle(6, 2), True),
        (make_aztec(3), True),
        (make_rectangle(3, 1), False),
        (make_rectangle(4, 3), False),
    ])
    def test_cases(self, region, expected):
        assert is_saturnian(region) is expected


class TestJson:
    def test_round_trip(self):
        r = make_aztec(2)
        assert region_from_json(region_to_json(r)) == r

    def test_cells_sorted(self):
        data = region_to_json(make_rectangle(2, 3))
        assert data["cells"] == sorted(data["cells"])

    @pytest.mark.parametrize("data", [
        {}, {"cells": []}, {"cells": [[0]]}, {"cells": [[0, "a"]]}, [1, 2],
    ])
    def test_rejects_malformed(self, data):
        with pytest.raises(ValueError):
            region_from_json(data)
