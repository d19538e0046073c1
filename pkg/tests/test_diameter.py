import pytest

from dominoflip import (DominoError, diameter_aztec_closed, diameter_bfs,
                        diameter_levels, diameter_rectangle_closed,
                        diameter_square_closed, is_saturnian, make_aztec,
                        make_holed_square, make_rectangle)


class TestClosedForms:
    @pytest.mark.parametrize("n,value", [(2, 1), (4, 10), (6, 35)])
    def test_square(self, n, value):
        assert diameter_square_closed(n) == value

    def test_square_rejects_odd(self):
        with pytest.raises(ValueError):
            diameter_square_closed(5)

    @pytest.mark.parametrize("m,n,value", [
        (6, 2, 5), (4, 3, 6), (4, 4, 10),
    ])
    def test_rectangle(self, m, n, value):
        assert diameter_rectangle_closed(m, n) == value

    def test_rectangle_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            diameter_rectangle_closed(3, 4)  # m < n
        with pytest.raises(ValueError):
            diameter_rectangle_closed(5, 3)  # odd cell count

    @pytest.mark.parametrize("n,value", [(1, 1), (2, 5), (4, 30)])
    def test_aztec(self, n, value):
        assert diameter_aztec_closed(n) == value

    def test_aztec_is_square_pyramidal(self):
        for n in range(1, 10):
            assert diameter_aztec_closed(n) == sum(i * i for i in range(1, n + 1))


class TestLevels:
    @pytest.mark.parametrize("region,value", [
        (make_rectangle(2, 2), 1),
        (make_rectangle(6, 6), 35),
        (make_aztec(4), 30),
    ])
    def test_examples(self, region, value):
        assert diameter_levels(region) == value

    def test_matches_rectangle_closed_forms(self):
        for n in range(2, 9):
            for m in range(n, 9):
                if (m * n) % 2 == 0:
                    assert (diameter_levels(make_rectangle(m, n))
                            == diameter_rectangle_closed(m, n)), (m, n)

    def test_matches_aztec_closed_forms(self):
        for n in range(1, 7):
            assert diameter_levels(make_aztec(n)) == diameter_aztec_closed(n)


class TestBfs:
    @pytest.mark.parametrize("region,value", [
        (make_rectangle(2, 2), 1),
        (make_rectangle(6, 2), 5),
        (make_aztec(2), 5),
    ])
    def test_examples(self, region, value):
        report = diameter_bfs(region)
        assert report.value == value
        assert report.method == "bfs"

    def test_realizers_attain_value(self):
        from dominoflip import distance_height
        region = make_rectangle(4, 3)
        report = diameter_bfs(region)
        a, b = report.realizers
        assert distance_height(region, a, b) == report.value

    def test_disconnected_graph_rejected(self):
        with pytest.raises(DominoError):
            diameter_bfs(make_holed_square(3))

    def test_saturnian_regions_attain_level_sum(self):
        for region in (make_rectangle(4, 4), make_rectangle(6, 2),
                       make_aztec(1), make_aztec(2), make_aztec(3)):
            assert is_saturnian(region)
            assert diameter_bfs(region).value == diameter_levels(region)

    def test_levels_upper_bound_simply_connected(self):
        for region in (make_rectangle(4, 3), make_rectangle(5, 2),
                       make_rectangle(3, 2)):
            assert diameter_bfs(region).value <= diameter_levels(region)
