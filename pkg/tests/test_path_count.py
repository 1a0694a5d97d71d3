"""Tests for the path and path-forest counting recurrences."""

import math

import pytest

from core.models import Graph
from services import generators
from services.oracle_service import count_all
from services.path_count_service import (
    branching_numbers, count_path, count_path_forest, count_prefix_not2, count_prefix_not2_reduced,
    count_table, growth_estimate, growth_root,
)


class TestCountPath:
    def test_small_values(self):
        assert [count_path(n) for n in range(1, 8)] == [1, 3, 4, 7, 12, 20, 34]

    def test_prefix_split(self):
        assert count_table(2).c2 == 1 and count_table(2).cn2 == 2
        row = count_table(3)
        assert (row.c2, row.cn2, row.total) == (1, 3, 4)

    def test_matches_oracle(self):
        for n in range(1, 13):
            g, _ = generators.path(n)
            assert count_path(n) == count_all(g)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            count_path(0)

    def test_reduced_recurrence(self):
        for n in range(6, 40):
            assert count_prefix_not2_reduced(n) == count_prefix_not2(n)
        with pytest.raises(ValueError):
            count_prefix_not2_reduced(5)


class TestForests:
    def test_product_over_components(self):
        assert count_path_forest([3, 4]) == 28

    def test_forest_matches_oracle(self):
        g = Graph.from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6)])
        assert count_all(g) == 28

    def test_matching_forest(self):
        assert count_path_forest([2] * 5) == 3 ** 5


class TestGrowth:
    def test_ratio_near_asymptotic_rate(self):
        assert 1.675 <= growth_estimate(40) <= 1.695

    def test_dominant_root(self):
        assert growth_root() == pytest.approx(1.6852, abs=1e-3)
        assert abs(growth_estimate(60) - growth_root()) < 1e-6

    def test_per_component_growth(self):
        rows = dict(branching_numbers(7))
        assert rows[2] == pytest.approx(math.sqrt(3))
        expected = {3: 1.5874, 4: 1.6266, 5: 1.6438, 6: 1.6475, 7: 1.6550}
        for n, value in expected.items():
            assert rows[n] == pytest.approx(value, abs=1e-3)

    def test_growth_needs_two(self):
        with pytest.raises(ValueError):
            growth_estimate(1)
