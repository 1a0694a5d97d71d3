"""Tests for graph parsing, interval models, recognizers and generators."""

from fractions import Fraction

import networkx as nx
import pytest

from core.errors import GraphParseError
from core.models import Graph, IntervalRepresentation
from services import generators
from services.graph_io import (
    load_graph, parse_edge_list, parse_intervals, serialize_edge_list, serialize_intervals,
)
from services.recognition import (
    connected_components, graph_from_intervals, interval_model_bruteforce, is_chordal,
    is_cobipartite, is_forest, is_split, simplicial_vertices, validate_partition,
)


class TestGraphModel:
    def test_from_edges_is_symmetric(self):
        g = Graph.from_edges(3, [(0, 1), (2, 1)])
        assert g.neighbors(1) == {0, 2}
        assert g.m == 2
        assert g.edges() == [(0, 1), (1, 2)]

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph.from_edges(2, [(1, 1)])

    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(ValueError, match="asymmetric"):
            Graph(2, (frozenset({1}), frozenset()))

    def test_complement(self, p3):
        assert p3.complement().edges() == [(0, 2)]

    def test_interval_rejects_reversed_endpoints(self):
        with pytest.raises(ValueError):
            IntervalRepresentation(((2, 1),))


class TestParseEdgeList:
    def test_single_edge(self):
        g = parse_edge_list("2 1\n0 1")
        assert g == Graph.from_edges(2, [(0, 1)])

    def test_path(self):
        assert parse_edge_list(b"3 2\n0 1\n1 2").edges() == [(0, 1), (1, 2)]

    def test_id_out_of_range_names_line(self):
        with pytest.raises(GraphParseError, match="out of range") as exc:
            parse_edge_list("3 2\n0 1\n0 3")
        assert exc.value.line == 3

    def test_self_loop(self):
        with pytest.raises(GraphParseError, match="self-loop"):
            parse_edge_list("2 1\n1 1")

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphParseError, match="announces 2 edges"):
            parse_edge_list("3 2\n0 1")

    def test_comments_crlf_and_duplicates(self):
        g = parse_edge_list("# header\r\n3 3\r\n1 0\r\n0 1\r\n# mid\r\n2 1\r\n")
        assert g.edges() == [(0, 1), (1, 2)]

    def test_non_utf8(self):
        with pytest.raises(GraphParseError, match="UTF-8"):
            parse_edge_list(b"\xff\xfe")

    def test_empty_input(self):
        with pytest.raises(GraphParseError, match="empty"):
            parse_edge_list("# nothing\n")

    def test_canonical_form_is_stable(self):
        g = generators.random_graph(8, seed=3)
        text = serialize_edge_list(g)
        assert parse_edge_list(text) == g
        assert serialize_edge_list(parse_edge_list(text)) == text

    def test_missing_file(self, tmp_path):
        with pytest.raises(GraphParseError, match="cannot read"):
            load_graph(tmp_path / "missing.edges")


class TestParseIntervals:
    def test_touching_intervals_are_adjacent(self):
        g = graph_from_intervals(parse_intervals("2\n0 1\n1 2"))
        assert g.has_edge(0, 1)

    def test_disjoint_intervals(self):
        assert graph_from_intervals(parse_intervals("2\n0 1\n2 3")).m == 0

    def test_decimal_endpoints(self):
        g = graph_from_intervals(parse_intervals("3\n0 2\n1 3\n2.5 4"))
        assert g.edges() == [(0, 1), (1, 2)]

    def test_rational_endpoints(self):
        rep = parse_intervals("1\n1/3 2/3")
        assert rep.left(0) == Fraction(1, 3)
        assert serialize_intervals(rep) == "1\n1/3 2/3\n"

    def test_reversed_interval(self):
        with pytest.raises(GraphParseError, match="l > r") as exc:
            parse_intervals("2\n0 1\n3 2")
        assert exc.value.line == 3

    def test_wrong_count(self):
        with pytest.raises(GraphParseError, match="announces 3 intervals"):
            parse_intervals("3\n0 1\n1 2")


class TestGraphFromIntervals:
    def test_separated_unit_intervals(self):
        rep = IntervalRepresentation(((0, 1), (10, 11), (20, 21)))
        assert graph_from_intervals(rep).m == 0

    def test_nested_intervals_form_clique(self):
        rep = IntervalRepresentation(tuple((i, 10 - i) for i in range(4)))
        assert graph_from_intervals(rep).m == 6

    def test_staircase_is_path(self):
        rep = IntervalRepresentation(tuple((i, i + 1) for i in range(4)))
        assert graph_from_intervals(rep).edges() == [(0, 1), (1, 2), (2, 3)]

    def test_leftmost_tie_break(self):
        rep = IntervalRepresentation(((1, 3), (0, 3), (0, 3)))
        assert min(range(3), key=rep.leftmost_key) == 1


class TestRecognition:
    def test_path_five(self):
        g, _ = generators.path(5)
        assert is_forest(g)
        assert is_chordal(g) is not None
        assert is_split(g) is None

    def test_four_cycle(self, c4):
        assert is_chordal(c4) is None
        assert not is_forest(c4)
        x, y = is_cobipartite(c4)
        assert c4.is_clique(x) and c4.is_clique(y)

    def test_triangle_with_pendant_is_split(self, triangle_with_pendant):
        clique, independent = is_split(triangle_with_pendant)
        assert clique == {0, 1, 2}
        assert independent == {3}

    def test_edgeless_triple_is_not_cobipartite(self):
        assert is_cobipartite(Graph(3)) is None

    def test_components(self):
        g = Graph.from_edges(5, [(0, 3), (1, 4)])
        assert connected_components(g) == [[0, 3], [1, 4], [2]]

    def test_elimination_ordering_property(self):
        for seed in range(20):
            g = generators.random_chordal(9, seed=seed)
            order = is_chordal(g)
            assert order is not None
            for i, v in enumerate(order):
                later = set(order[i + 1:])
                assert g.is_clique(g.neighbors(v) & later)

    def test_chordality_matches_networkx(self):
        for n in range(3, 10):
            for seed in range(15):
                g = generators.random_graph(n, seed=seed)
                h = nx.Graph()
                h.add_nodes_from(g.vertices)
                h.add_edges_from(g.edges())
                assert (is_chordal(g) is not None) == nx.is_chordal(h)

    def test_forest_and_cobipartite_match_networkx(self):
        for n in range(2, 9):
            for seed in range(15):
                g = generators.random_graph(n, seed=seed, p=0.3)
                h = nx.Graph()
                h.add_nodes_from(g.vertices)
                h.add_edges_from(g.edges())
                assert is_forest(g) == nx.is_forest(h)
                assert (is_cobipartite(g) is not None) == nx.is_bipartite(nx.complement(h))

    def test_validate_partition(self, triangle_with_pendant):
        assert validate_partition(triangle_with_pendant, {0, 1, 2}, {3}, "split") == (True, "")
        ok, message = validate_partition(triangle_with_pendant, {0, 1}, {2, 3}, "split")
        assert not ok and "independent" in message
        with pytest.raises(ValueError):
            validate_partition(triangle_with_pendant, {0}, {1, 2, 3}, "bogus")


class TestSimplicialVertices:
    def test_path(self, p3):
        assert simplicial_vertices(p3, p3.vertices) == [0, 2]

    def test_clique(self, k4):
        assert simplicial_vertices(k4, k4.vertices) == [0, 1, 2, 3]

    def test_chordless_cycle(self, c4):
        assert simplicial_vertices(c4, c4.vertices) == []

    def test_restricted_to_alive(self, c4):
        assert simplicial_vertices(c4, [0, 1, 2]) == [0, 2]


class TestIntervalBruteforce:
    def test_path_has_model(self):
        g, _ = generators.path(5)
        rep = interval_model_bruteforce(g)
        assert rep is not None
        assert graph_from_intervals(rep) == g

    def test_cycle_has_no_model(self, c4):
        assert interval_model_bruteforce(c4) is None

    def test_size_limit(self):
        with pytest.raises(ValueError, match="limited"):
            interval_model_bruteforce(Graph(9))


class TestGenerators:
    def test_path_with_intervals(self):
        g, rep = generators.path(4)
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]
        assert rep.intervals[2] == (Fraction(2), Fraction(3))
        assert graph_from_intervals(rep) == g

    def test_split_lower_bound_graph(self):
        g, rep = generators.generate("split_lb", 2)
        assert rep is None
        assert (g.n, g.m) == (4, 3)
        assert is_split(g) is not None

    def test_p2_forest(self):
        g, rep = generators.generate("p2_forest", 3)
        assert (g.n, g.m) == (6, 3)
        assert graph_from_intervals(rep) == g

    def test_star_and_cycle(self):
        assert generators.star(4).degree(0) == 4
        assert generators.cycle(5).m == 5

    def test_cobipartite_lower_bound_graph(self):
        g = generators.cobip_lb(3)
        assert (g.n, g.m) == (6, 9)
        assert is_cobipartite(g) is not None

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="Unknown family"):
            generators.generate("petersen", 3)

    def test_size_must_be_positive(self):
        with pytest.raises(ValueError):
            generators.generate("path", 0)

    def test_random_families_stay_in_class(self):
        for seed in range(10):
            tree = generators.random_tree(9, seed=seed)
            assert is_forest(tree) and tree.m == 8
            assert is_forest(generators.random_forest(9, seed=seed))
            assert is_split(generators.random_split(9, seed=seed)) is not None
            assert is_cobipartite(generators.random_cobipartite(9, seed=seed)) is not None
            assert is_chordal(generators.random_chordal(9, seed=seed)) is not None

    def test_random_interval_has_distinct_endpoints(self):
        g, rep = generators.random_interval(8, seed=5)
        endpoints = [x for interval in rep.intervals for x in interval]
        assert len(set(endpoints)) == 16
        assert graph_from_intervals(rep) == g

    def test_seeded_generation_is_reproducible(self):
        assert generators.random_graph(10, seed=7) == generators.random_graph(10, seed=7)
        assert generators.random_instance("tree", 10, 4) == generators.random_instance("tree", 10, 4)
