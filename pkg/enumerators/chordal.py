"""Chordal-graph enumerator.

Rules are tried in order, each assuming the earlier ones no longer apply; within a rule the
qualifying vertex with the smallest id is taken. Simpliciality and degrees refer to the live
induced subgraph, which stays chordal.
"""

import logging
from typing import Iterator, Optional

from config import settings
from core.errors import ClassMismatchError
from core.models import Graph, RomanFunction, WeightSet
from enumerators.branch_core import BranchState, Branching, EngineStats, Label, branch, initial_state, run
from services.analysis_service import load_ruleset
from services.recognition import is_chordal

logger = logging.getLogger(__name__)

A, NOT1, NOT2, V0 = Label.A, Label.NOT1, Label.NOT2, Label.V0
_OUT_LIVE = (NOT2, V0)


def _binary(rule: str, v: int) -> Branching:
    return Branching(rule, (branch(twos=(v,)), branch(outs=(v,))))


def _undecided(state: BranchState, vertices) -> list[int]:
    return [u for u in vertices if state.is_undecided(u)]


def _simplicial(state: BranchState, v: int, min_degree: int = 2) -> bool:
    return state.live_degree(v) >= min_degree and state.is_live_simplicial(v)


def three_in_a(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(A):
        if len(state.live_neighbors(v, A, NOT2)) >= 3:
            return _binary("3-in-A", v)
    return None


def a_with_special_not_v1(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(A):
        not2 = state.live_neighbors(v, NOT2)
        if not not2:
            continue
        not1 = state.live_neighbors(v, NOT1)
        special = any(
            all(state.label(x) is NOT1 for x in state.live_neighbors(u) if x != v and x != w)
            for u in not1 for w in not2
        )
        if not special:
            continue
        shielded = set(not2) | {v}
        outs = [
            u for u in not1
            if all(state.label(x) is NOT1 for x in state.live_neighbors(u) if x not in shielded)
        ]
        return Branching("A-with-one-notV2-and-one-special-notV1",
                         (branch(twos=(v,), outs=outs), branch(outs=(v,))))
    return None


def two_not_in_v1_bar(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(NOT1):
        if len(state.live_neighbors(v, NOT2)) >= 2:
            return _binary("2-not-in-V1-bar", v)
    return None


def two_not_in_v1_bar_a(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(NOT1):
        if len(state.live_neighbors(v, A, NOT2)) >= 3:
            return _binary("2-not-in-V1-bar-a", v)
    return None


def simp_not_in_v1(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(NOT1):
        if _simplicial(state, v):
            outs = _undecided(state, state.live_neighbors(v))
            return Branching("simp-not-in-V1", (branch(twos=(v,), outs=outs), branch(outs=(v,))))
    return None


def pendant_adjacent(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(NOT2):
        undecided = _undecided(state, state.live_neighbors(v))
        if len(undecided) == 1 and state.label(undecided[0]) is NOT1:
            return _binary("pendant-adjacent", undecided[0])
    return None


def _pendant_in_a(state: BranchState, v: int) -> Optional[int]:
    nbrs = state.live_neighbors(v)
    if len(nbrs) == 1 and state.label(nbrs[0]) is NOT2:
        return nbrs[0]
    return None


def pendant_in_a_1(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(A):
        w = _pendant_in_a(state, v)
        if w is not None and all(state.label(x) in _OUT_LIVE for x in state.live_neighbors(w) if x != v):
            return _binary("pendant-in-A-1", v)
    return None


def pendant_in_a_1_a(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(A):
        w = _pendant_in_a(state, v)
        if w is None:
            continue
        others = [x for x in state.live_neighbors(w) if x != v]
        if any(state.label(x) in (A, NOT1) for x in others):
            return Branching("pendant-in-A-1-a",
                             (branch(twos=(v,), outs=_undecided(state, others)), branch(outs=(v,))))
    return None


def pendant_in_a_2(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(A):
        a_nbrs = state.live_neighbors(v, A)
        if len(a_nbrs) != 1:
            continue
        if any(state.label(x) is not NOT1 for x in state.live_neighbors(v) if x != a_nbrs[0]):
            continue
        w = a_nbrs[0]
        outs = [w, *_undecided(state, (x for x in state.live_neighbors(w) if x != v))]
        return Branching("pendant-in-A-2", (branch(twos=(v,), outs=outs), branch(outs=(v,))))
    return None


def pendant_not_in_v2(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(NOT2):
        nbrs = state.live_neighbors(v)
        if len(nbrs) == 1 and state.label(nbrs[0]) is A:
            return _binary("pendant-not-in-V2", nbrs[0])
    return None


def pendant_not_in_v1_activ(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(NOT1):
        nbrs = state.live_neighbors(v)
        if len(nbrs) != 1 or state.label(nbrs[0]) is not A:
            continue
        w = nbrs[0]
        if len(state.live_neighbors(w, A)) == 2:
            outs = [w, *_undecided(state, (x for x in state.live_neighbors(w) if x != v))]
            return Branching("pendant-not-in-V1-activ", (branch(twos=(v,), outs=outs), branch(outs=(v,))))
    return None


def simp_non_pendant_in_a_1(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(A):
        if _simplicial(state, v) and all(state.label(x) in _OUT_LIVE for x in state.live_neighbors(v)):
            return _binary("simp-non-pendant-in-A-1", v)
    return None


def simp_non_pendant_in_a_2(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(A):
        if _simplicial(state, v) and state.live_neighbors(v, A):
            outs = _undecided(state, state.live_neighbors(v))
            return Branching("simp-non-pendant-in-A-2", (branch(twos=(v,), outs=outs), branch(outs=(v,))))
    return None


def simp_non_pendant_not_in_v2_1(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(NOT2):
        nbrs = state.live_neighbors(v)
        if len(nbrs) != 2 or not state.is_live_simplicial(v):
            continue
        labels = {state.label(x) for x in nbrs}
        if labels == {A, NOT2}:
            w = next(x for x in nbrs if state.label(x) is A)
            return _binary("simp-non-pandant-not-in-V2-1", w)
    return None


def simp_non_pendant_not_in_v2_2(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(NOT2):
        nbrs = state.live_neighbors(v)
        if len(nbrs) == 2 and state.is_live_simplicial(v) and all(state.label(x) is A for x in nbrs):
            w, w2 = nbrs
            return Branching("simp-non-pandant-not-in-V2-2", (
                branch(twos=(w,)),
                branch(twos=(w2,), outs=(w,)),
                branch(outs=(w, w2)),
            ))
    return None


def simp_non_pendant_not_in_v2_3(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(NOT2):
        if not _simplicial(state, v):
            continue
        nbrs = state.live_neighbors(v)
        for w in nbrs:
            if state.label(w) is NOT1 and all(state.label(x) is NOT1 for x in state.live_neighbors(w) if x != v):
                outs = _undecided(state, (x for x in nbrs if x != w))
                return Branching("simp-non-pendant-not-in-V2-3", (branch(twos=(w,), outs=outs), branch(outs=(w,))))
    return None


def semi_simp(state: BranchState) -> Optional[Branching]:
    for v in state.vertices(NOT2):
        if not _simplicial(state, v):
            continue
        candidates = state.live_neighbors(v, NOT1)
        for w in candidates:
            closed_w = set(state.live_neighbors(w)) | {w}
            for w2 in candidates:
                if w2 != w and closed_w <= set(state.live_neighbors(w2)) | {w2}:
                    return Branching("semi-simp", (branch(twos=(w2,), outs=(w,)), branch(outs=(w2,))))
    return None


RULES = [
    three_in_a,
    a_with_special_not_v1,
    two_not_in_v1_bar,
    two_not_in_v1_bar_a,
    simp_not_in_v1,
    pendant_adjacent,
    pendant_in_a_1,
    pendant_in_a_1_a,
    pendant_in_a_2,
    pendant_not_in_v2,
    pendant_not_in_v1_activ,
    simp_non_pendant_in_a_1,
    simp_non_pendant_in_a_2,
    simp_non_pendant_not_in_v2_1,
    simp_non_pendant_not_in_v2_2,
    simp_non_pendant_not_in_v2_3,
    semi_simp,
]


def weights() -> WeightSet:
    return WeightSet(settings.CHORDAL_OMEGA1, settings.CHORDAL_OMEGA2, label="chordal")


def enumerate_chordal(g: Graph, stats: Optional[EngineStats] = None, **engine) -> Iterator[RomanFunction]:
    """Every minimal rdf of the chordal graph g. A state no rule covers raises StuckStateError."""
    if is_chordal(g) is None:
        raise ClassMismatchError("chordal", "maximum cardinality search order is not a perfect elimination ordering")
    logger.debug("Chordal n=%d m=%d, weights %s", g.n, g.m, weights())
    declared = {v.name: v for v in load_ruleset("chordal")}
    yield from run(
        initial_state(g), RULES, ruleset="chordal", weights=weights(), declared=declared,
        stats=stats, fallback=None, **engine,
    )
