"""Tests for the bench harness."""

import math

import pytest

from services.bench_service import COLUMNS, bench, bench_one


class TestBenchOne:
    def test_row_fields(self):
        row = bench_one("path", 5)
        assert list(row) == COLUMNS
        assert row["count"] == 12
        assert row["wall_time"] >= row["max_inter_solution_delay"] >= 0.0

    def test_matching_forest_hits_sqrt3(self):
        row = bench_one("p2_forest", 4)
        assert row["n"] == 8
        assert row["count^(1/n)"] == pytest.approx(math.sqrt(3))

    def test_interval_needs_model(self):
        with pytest.raises(ValueError, match="no interval representation"):
            bench_one("star", 3, "interval")


class TestBench:
    def test_path_counts(self):
        frame = bench("path", range(1, 8))
        assert list(frame.columns) == COLUMNS
        assert frame["count"].tolist() == [1, 3, 4, 7, 12, 20, 34]

    def test_split_lower_bound(self):
        frame = bench("split_lb", [2, 3, 4], "split")
        assert frame["count"].tolist() == [7, 15, 31]

    def test_worker_processes(self):
        frame = bench("star", [2, 3, 4], jobs=2)
        assert frame["count"].tolist() == [4, 5, 6]
