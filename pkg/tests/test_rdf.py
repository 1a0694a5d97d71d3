"""Tests for Roman dominating functions: weight, rdf test, privacy, reconstruction."""

import itertools

import pytest

from core.models import Graph, RomanFunction
from services import generators
from services.rdf_service import (
    from_v2, function_from_json, function_to_json, has_external_private_neighbors, is_minimal_by_definition,
    is_minimal_rdf, is_rdf, private_neighborhood, weight,
)


def _f(text: str) -> RomanFunction:
    return RomanFunction.from_text(text)


def _all_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def _subsets(n: int):
    for r in range(n + 1):
        yield from itertools.combinations(range(n), r)


class TestRomanFunction:
    def test_text_and_levels(self):
        f = _f("0201")
        assert f.text == "0201"
        assert f.v0 == {0, 2} and f.v1 == {3} and f.v2 == {1}

    def test_rejects_other_values(self):
        with pytest.raises(ValueError):
            _f("0301")
        with pytest.raises(ValueError):
            RomanFunction((0, 3))

    def test_json_forms(self):
        assert function_to_json(_f("0201")) == "[0, 2, 0, 1]"
        assert function_from_json("[2, 0]") == _f("20")
        with pytest.raises(ValueError):
            function_from_json('{"f": "20"}')


class TestWeight:
    def test_all_zero(self):
        assert weight(_f("00")) == 0

    def test_all_one(self):
        assert weight(_f("111")) == 3

    def test_star_centre(self):
        assert weight(_f("2000")) == 2


class TestIsRdf:
    def test_all_ones(self, p4):
        assert is_rdf(p4, _f("1111"))

    def test_centre_dominates(self, p3):
        assert is_rdf(p3, _f("020"))

    def test_undominated_zero(self, p3):
        assert not is_rdf(p3, _f("011"))

    def test_length_mismatch(self, p3):
        with pytest.raises(ValueError, match="order 3"):
            is_rdf(p3, _f("02"))


class TestPrivateNeighborhood:
    def test_singleton(self, p3):
        assert private_neighborhood(p3, {1}, 1) == {0, 1, 2}

    def test_shared_closed_neighbourhoods(self, k3):
        assert private_neighborhood(k3, {0, 1}, 0) == frozenset()

    def test_path_ends(self, p4):
        assert private_neighborhood(p4, {0, 3}, 0) == {0, 1}

    def test_vertex_outside_set(self, p4):
        with pytest.raises(ValueError):
            private_neighborhood(p4, {0}, 2)


class TestMinimality:
    def test_star_centre_two(self):
        star = generators.star(3)
        assert is_minimal_rdf(star, _f("2000"))

    def test_star_all_ones(self):
        assert is_minimal_rdf(generators.star(3), _f("1111"))

    def test_shared_middle(self, p3):
        assert not is_minimal_rdf(p3, _f("202"))

    def test_path_three_has_four(self, p3):
        minimal = [f for f in map(RomanFunction, itertools.product((0, 1, 2), repeat=3)) if is_minimal_rdf(p3, f)]
        assert sorted(f.text for f in minimal) == ["020", "102", "111", "201"]

    def test_lone_vertex(self, k1):
        assert is_minimal_rdf(k1, _f("1"))
        assert not is_minimal_rdf(k1, _f("2"))
        assert not is_minimal_rdf(k1, _f("0"))

    def test_matches_definition_on_all_small_graphs(self):
        for n in range(1, 5):
            for g in _all_graphs(n):
                for values in itertools.product((0, 1, 2), repeat=n):
                    f = RomanFunction(values)
                    assert is_minimal_rdf(g, f) == is_minimal_by_definition(g, f), (g.edges(), f.text)

    def test_matches_definition_on_random_graphs(self):
        for seed in range(8):
            g = generators.random_graph(6, seed=seed)
            for values in itertools.product((0, 1, 2), repeat=6):
                f = RomanFunction(values)
                assert is_minimal_rdf(g, f) == is_minimal_by_definition(g, f)


class TestFromV2:
    def test_empty_set(self, p3):
        assert from_v2(p3, ()).text == "111"

    def test_centre(self, p3):
        assert from_v2(p3, {1}).text == "020"

    def test_path_end(self, p4):
        assert from_v2(p4, {0}).text == "2011"

    def test_ones_stay_outside_closed_neighbourhood(self):
        g = generators.random_graph(7, seed=11)
        for s in _subsets(7):
            f = from_v2(g, s)
            assert not (g.closed_neighborhood_of(f.v2) & f.v1)
            assert f.v2 == frozenset(s)

    def test_external_private_neighbours_decide_minimality(self, p4, spider):
        for g in (p4, spider):
            for s in _subsets(g.n):
                assert has_external_private_neighbors(g, s) == is_minimal_rdf(g, from_v2(g, s))
