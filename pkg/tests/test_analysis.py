"""Tests for the vector DSL, branching numbers, rule-set tables and weight search."""

import math

import numpy as np
import pytest

from core.errors import VectorParseError
from core.models import WeightSet
from services.analysis_service import (
    alternate_forms, analyze_ruleset, branching_number, default_bounds, default_weights, evaluate,
    grid_numbers, load_ruleset, optimize_weights, parse_vector, parse_vectors, verify_sqrt3_family,
)

INTERVAL_W = WeightSet(1.0, 0.57)
CHORDAL_W = WeightSet(0.710134, 0.434799)


class TestVectorDsl:
    def test_plain_vector(self):
        v = parse_vector("(1, 1+w)", name="BRDom")
        assert evaluate(v, INTERVAL_W) == pytest.approx([1.0, 1.57])
        assert not v.is_family

    def test_repeated_family(self):
        v = parse_vector("(k*(w+k), w+(1-w)*k)")
        assert v.is_family
        assert evaluate(v, INTERVAL_W, k=3) == pytest.approx([3.57, 3.57, 3.57, 0.57 + 0.43 * 3])

    def test_min_and_two_weights(self):
        v = parse_vector("(1-w2, 1+3*min(1-w1, w2))")
        assert evaluate(v, WeightSet(0.7, 0.2)) == pytest.approx([0.8, 1.6])

    def test_document(self):
        rules = parse_vectors("# comment\n\nA: (1, 2)\nB rule: (3, 1)\n")
        assert [r.name for r in rules] == ["A", "B rule"]

    def test_unknown_symbol(self):
        with pytest.raises(VectorParseError, match="unknown symbol"):
            parse_vector("(1, x)")

    def test_missing_parentheses(self):
        with pytest.raises(VectorParseError):
            parse_vector("1, 2")

    def test_bad_line_number(self):
        with pytest.raises(VectorParseError) as exc:
            parse_vectors("A: (1, 2)\nB (1, 2)\n")
        assert exc.value.line == 2

    def test_empty_document(self):
        with pytest.raises(VectorParseError, match="no vectors"):
            parse_vectors("# only a comment\n")

    def test_unknown_ruleset(self):
        with pytest.raises(ValueError, match="Unknown ruleset"):
            load_ruleset("planar")


class TestBranchingNumber:
    def test_split_vector(self):
        assert branching_number((1, 3)) == pytest.approx(1.4656, abs=1e-4)

    def test_even_split(self):
        assert branching_number((2, 2)) == pytest.approx(math.sqrt(2))

    def test_single_entry(self):
        assert branching_number((5,)) == 1.0

    def test_root_solves_equation(self):
        x = branching_number((1, 3, 4, 5))
        assert sum(x ** -a for a in (1, 3, 4, 5)) == pytest.approx(1.0, abs=1e-9)

    def test_small_entries_need_wide_bracket(self):
        x = branching_number((0.1, 0.1))
        assert x == pytest.approx(2 ** 10, rel=1e-6)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            branching_number((1, 0))
        with pytest.raises(ValueError):
            branching_number(())

    def test_grid_matches_scalar(self):
        v = parse_vector("(2-w1+w2, 2+w2, 2-w2)")
        w1 = np.array([0.2, 0.5, 0.9])
        w2 = np.array([0.1, 0.4, 0.8])
        grid = grid_numbers(v, w1, w2)
        for i in range(3):
            assert grid[i] == pytest.approx(branching_number(v, WeightSet(w1[i], w2[i])), abs=1e-9)


class TestRulesetTables:
    def test_interval_rules(self):
        numbers = analyze_ruleset(load_ruleset("interval"), INTERVAL_W).numbers
        expected = {
            "BRDom": 1.7314, "BRNotDominatable": 1.7314, "BRP0": 1.6992, "BR_P2TildeV2": 1.6829,
            "BR_P1": 1.7274, "BR_P2single": 1.6877, "BRP3": 1.7315,
        }
        for name, value in expected.items():
            assert numbers[name] == pytest.approx(value, abs=1e-3), name

    def test_interval_worst_below_sqrt3(self):
        analysis = analyze_ruleset(load_ruleset("interval"), INTERVAL_W)
        assert analysis.worst <= math.sqrt(3) + 1e-9

    def test_isolated_path_rules(self):
        numbers = analyze_ruleset(load_ruleset("interval"), INTERVAL_W).numbers
        assert numbers["BR_IsolatedP2"] == pytest.approx(math.sqrt(3), abs=1e-9)
        assert numbers["BR_IsolatedP3"] == pytest.approx(4 ** (1 / 3), abs=1e-9)

    def test_forest_rules(self):
        numbers = analyze_ruleset(load_ruleset("forest"), INTERVAL_W).numbers
        expected = {
            "BRLeafnot2": 1.7314, "BRLeafParentnot2": 1.7314, "BRParentLeafs": 1.6288, "BRP2vnot2": 1.6582,
            "BRP2ParentLeaf": 1.7164, "BR2P2": 1.7029, "BRP3vnot2": 1.7156, "BRP3ParentLeaf": 1.6966,
            "BRP3P2": 1.7158, "BR2P3": 1.7296, "BRP3Tree": 1.7315,
        }
        for name, value in expected.items():
            assert numbers[name] == pytest.approx(value, abs=1e-3), name
        assert max(numbers.values()) <= math.sqrt(3)

    def test_forest_p4_rule_below_printed_value(self):
        number = analyze_ruleset(load_ruleset("forest"), INTERVAL_W).numbers["BRP4not2"]
        assert number == pytest.approx(1.6888, abs=1e-3)
        assert number < 1.7275

    def test_chordal_rules(self):
        analysis = analyze_ruleset(load_ruleset("chordal"), CHORDAL_W)
        expected = {
            "3-in-A": 1.8940,
            "A-with-one-notV2-and-one-special-notV1": 1.8014,
            "simp-not-in-V1": 1.7915,
            "pendant-adjacent": 1.8321,
            "pendant-in-A-1-a": 1.6181,
            "pendant-in-A-2": 1.8471,
            "pendant-not-in-V2": 1.779,
            "pendant-not-in-V1-activ": 1.5743,
            "simp-non-pendant-in-A-2": 1.7249,
            "simp-non-pandant-not-in-V2-2": 1.8005,
        }
        for name, value in expected.items():
            assert analysis.numbers[name] == pytest.approx(value, abs=1e-3), name
        assert analysis.worst_rule == "2-not-in-V1-bar"
        assert analysis.worst == pytest.approx(1.8940, abs=1e-3)
        # 3-in-A trails the worst rule by well under 1e-6 at these weights
        assert 0 < analysis.worst - analysis.numbers["3-in-A"] < 1e-6
        assert analysis.numbers["2-not-in-V1-bar"] == analysis.worst

    def test_split_rules(self):
        analysis = analyze_ruleset(load_ruleset("split"), default_weights("split"))
        assert analysis.worst == pytest.approx(1.4656, abs=1e-4)

    def test_alternate_interval_form(self):
        rows = alternate_forms("interval", INTERVAL_W)
        assert len(rows) == 1
        name, stored, alternate, same = rows[0]
        assert name == "BR_P1" and same
        assert stored == pytest.approx(alternate)
        assert stored == pytest.approx(1.7274, abs=1e-3)

    def test_alternate_chordal_form(self):
        rows = {name: row for name, *row in alternate_forms("chordal", CHORDAL_W)}
        stored, alternate, same = rows["2-not-in-V1-bar-a"]
        assert same
        assert stored == pytest.approx(alternate)


class TestSqrt3Family:
    def test_holds_at_default_weight(self):
        check = verify_sqrt3_family(50, omega=0.57)
        assert check.passed
        assert len(check.rows) == 50
        assert all(number <= check.bound + 1e-9 for _, number in check.rows)

    def test_fails_for_small_weight(self):
        assert not verify_sqrt3_family(10, omega=0.1).passed

    def test_needs_positive_range(self):
        with pytest.raises(ValueError):
            verify_sqrt3_family(0)


class TestWeightSearch:
    def test_chordal_optimum(self):
        weights, worst = optimize_weights(load_ruleset("chordal"), refine_step=1e-3)
        assert worst <= 1.8940 + 1e-3
        assert weights.label == "optimized"
        assert 0.0 <= weights.w1 <= 1.0 and 0.0 <= weights.w2 <= 1.0

    def test_interval_bounds_keep_first_weight(self):
        bounds = default_bounds("interval")
        weights, worst = optimize_weights(load_ruleset("interval"), bounds, family_cap=16)
        assert weights.w1 == 1.0
        assert worst <= math.sqrt(3) + 1e-3

    def test_rejects_bounds_outside_unit_square(self):
        with pytest.raises(ValueError):
            optimize_weights(load_ruleset("split"), ((0.0, 2.0), (0.0, 1.0)))
