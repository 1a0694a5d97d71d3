"""Forest enumerator.

Works on the live forest with Â = A ∪ V̄1 (undecided vertices) and V̄2, and L the leaves of the
live forest. Every rule is a list of (into V2, out of V2) patterns; the patterns of a rule are
pairwise disjoint and together cover every minimal rdf compatible with the state.
"""

import logging
from typing import Iterator, Optional

from config import settings
from core.errors import ClassMismatchError
from core.models import Graph, RomanFunction, WeightSet
from enumerators.branch_core import (
    BranchState, Branching, EngineStats, Label, branch, completion_branch, initial_state, run,
)
from services.analysis_service import load_ruleset
from services.recognition import connected_components, is_forest

logger = logging.getLogger(__name__)


def _hat_a(state: BranchState, v: int) -> bool:
    return state.is_undecided(v)


def _not2(state: BranchState, v: int) -> bool:
    return state.label(v) is Label.NOT2


def _nbrs(state: BranchState, v: int) -> list[int]:
    return state.live_neighbors(v)


def _is_leaf(state: BranchState, v: int) -> bool:
    return len(_nbrs(state, v)) == 1


def _hat_a_leaves(state: BranchState, v: int) -> list[int]:
    return [u for u in _nbrs(state, v) if _hat_a(state, u) and _is_leaf(state, u)]


def _patterns(rule: str, patterns) -> Branching:
    return Branching(rule, tuple(branch(twos=ins, outs=outs) for ins, outs in patterns))


def _pendant_path(state: BranchState, u: int, v: int) -> Optional[int]:
    """w when N(u) = {v, w} and w is a leaf."""
    nu = _nbrs(state, u)
    if len(nu) != 2 or v not in nu:
        return None
    w = nu[0] if nu[1] == v else nu[1]
    return w if _is_leaf(state, w) else None


def _path3(state: BranchState, u: int, v: int) -> Optional[tuple[int, int]]:
    """(w, x) when N(u) = {v, w}, N(w) = {u, x} and x is a leaf."""
    nu = _nbrs(state, u)
    if len(nu) != 2 or v not in nu:
        return None
    w = nu[0] if nu[1] == v else nu[1]
    x = _pendant_path(state, w, u)
    return (w, x) if x is not None else None


def _path4(state: BranchState, u: int, v: int) -> Optional[tuple[int, int, int]]:
    """(w, x, y) when u, w, x hang off v as a chain ending in the leaf y."""
    nu = _nbrs(state, u)
    if len(nu) != 2 or v not in nu:
        return None
    w = nu[0] if nu[1] == v else nu[1]
    rest = _path3(state, w, u)
    return (w, *rest) if rest is not None else None


# ---------------------------------------------------------------------------
# Rules, in priority order
# ---------------------------------------------------------------------------

def br_leaf_not2(state: BranchState) -> Optional[Branching]:
    for v in state.g.vertices:
        if _not2(state, v) and _is_leaf(state, v):
            u = _nbrs(state, v)[0]
            if _hat_a(state, u):
                return _patterns("BRLeafnot2", [((u,), ()), ((), (u,))])
    return None


def br_leaf_parent_not2(state: BranchState) -> Optional[Branching]:
    for v in state.g.vertices:
        if _not2(state, v):
            leaves = _hat_a_leaves(state, v)
            if leaves:
                u = leaves[0]
                return _patterns("BRLeafParentnot2", [((u,), ()), ((), (u,))])
    return None


def br_parent_leafs(state: BranchState) -> Optional[Branching]:
    for v in state.g.vertices:
        if _hat_a(state, v):
            leaves = _hat_a_leaves(state, v)
            if len(leaves) >= 2:
                u, w = leaves[0], leaves[1]
                return _patterns("BRParentLeafs", [
                    ((u,), (v, w)), ((w,), (u, v)), ((v,), (u, w)), ((), (u, v, w)),
                ])
    return None


def br_p2_v_not2(state: BranchState) -> Optional[Branching]:
    for v in state.g.vertices:
        if not _not2(state, v):
            continue
        for u in _nbrs(state, v):
            if _hat_a(state, u):
                w = _pendant_path(state, u, v)
                if w is not None:
                    return _patterns("BRP2vnot2", [((u,), (w,)), ((w,), (u,)), ((), (u, w))])
    return None


def br_p2_parent_leaf(state: BranchState) -> Optional[Branching]:
    for v in state.g.vertices:
        if not _hat_a(state, v):
            continue
        leaves = _hat_a_leaves(state, v)
        if len(leaves) != 1:
            continue
        x = leaves[0]
        for u in _nbrs(state, v):
            if u == x or not _hat_a(state, u):
                continue
            w = _pendant_path(state, u, v)
            if w is not None and _hat_a(state, w):
                return _patterns("BRP2ParentLeaf", [((v,), (w, x)), ((x,), (v, u)), ((), (v, x))])
    return None


def br_2p2(state: BranchState) -> Optional[Branching]:
    for v in state.g.vertices:
        if not _hat_a(state, v):
            continue
        arms = []
        for u in _nbrs(state, v):
            if _hat_a(state, u):
                w = _pendant_path(state, u, v)
                if w is not None and _hat_a(state, w):
                    arms.append((u, w))
        if len(arms) >= 2:
            (u1, w1), (u2, w2) = arms[0], arms[1]
            return _patterns("BR2P2", [
                ((v, u1, u2), (w1, w2)),
                ((v, u1), (u2, w1, w2)),
                ((v, u2), (u1, w1, w2)),
                ((v,), (u1, u2, w1, w2)),
                ((u1,), (v, w1)),
                ((u2, w1), (v, u1, w2)),
                ((w2, w1), (v, u1, u2)),
                ((w1,), (v, u1, u2, w2)),
                ((u2,), (v, u1, w1, w2)),
                ((w2,), (v, u1, u2, w1)),
                ((), (v, u1, u2, w1, w2)),
            ])
    return None


def br_p3_v_not2(state: BranchState) -> Optional[Branching]:
    for v in state.g.vertices:
        if not _not2(state, v):
            continue
        for u in _nbrs(state, v):
            if _hat_a(state, u):
                found = _path3(state, u, v)
                if found is not None:
                    w, x = found
                    return _patterns("BRP3vnot2", [((u,), (x,)), ((w,), (u, x)), ((), (u, w))])
    return None


def br_p3_parent_leaf(state: BranchState) -> Optional[Branching]:
    for v in state.g.vertices:
        if not _hat_a(state, v):
            continue
        leaves = [y for y in _nbrs(state, v) if _is_leaf(state, y)]
        if not leaves:
            continue
        y = leaves[0]
        for u in _nbrs(state, v):
            if u == y or not _hat_a(state, u):
                continue
            found = _path3(state, u, v)
            if found is not None:
                w, x = found
                return _patterns("BRP3ParentLeaf", [
                    ((v,), (y,)), ((u,), (v, x)), ((w,), (v, u, x)), ((x,), (v, u, w)), ((), (v, u, w, x)),
                ])
    return None


def br_p3_p2(state: BranchState) -> Optional[Branching]:
    for v in state.g.vertices:
        if not _hat_a(state, v):
            continue
        for u in _nbrs(state, v):
            if not _hat_a(state, u):
                continue
            found = _path3(state, u, v)
            if found is None:
                continue
            w, x = found
            for y in _nbrs(state, v):
                if y == u or not _hat_a(state, y):
                    continue
                z = _pendant_path(state, y, v)
                if z is not None:
                    return _patterns("BRP3P2", [
                        ((v, u), (w, x, z)),
                        ((v, y), (u, z)),
                        ((v,), (u, y, z)),
                        ((u, w), (v, x, y)),
                        ((u,), (v, w, x)),
                        ((w,), (v, u, x)),
                        ((x,), (v, u, w)),
                        ((), (v, u, w, x)),
                    ])
    return None


def br_2p3(state: BranchState) -> Optional[Branching]:
    for v in state.g.vertices:
        if not _hat_a(state, v):
            continue
        arms = []
        for u in _nbrs(state, v):
            if _hat_a(state, u):
                found = _path3(state, u, v)
                if found is not None:
                    arms.append((u, *found))
        if len(arms) >= 2:
            (u1, w1, x1), (u2, w2, x2) = arms[0], arms[1]
            return _patterns("BR2P3", [
                ((u1, u2), (w1, w2, x1, x2)),
                ((u1, w1), (v, u2, x1)),
                ((u1,), (u2, w1, x1)),
                ((w1,), (u1, x1)),
                ((x1,), (u1, w1)),
                ((), (u1, w1, x1)),
            ])
    return None


def br_p4_not2(state: BranchState) -> Optional[Branching]:
    for v in state.g.vertices:
        if not _not2(state, v):
            continue
        for u in _nbrs(state, v):
            if _hat_a(state, u):
                found = _path4(state, u, v)
                if found is not None:
                    w, x, y = found
                    return _patterns("BRP4not2", [
                        ((u, w), (x, y)),
                        ((u,), (w,)),
                        ((w, x), (u, y)),
                        ((w,), (u, x, y)),
                        ((x,), (u, w, y)),
                        ((), (u, w, x)),
                    ])
    return None


def br_p3_tree(state: BranchState) -> Optional[Branching]:
    for v in state.g.vertices:
        if not _hat_a(state, v):
            continue
        for u in _nbrs(state, v):
            if _hat_a(state, u):
                found = _path4(state, u, v)
                if found is not None:
                    w, x, y = found
                    return _patterns("BRP3Tree", [
                        ((y,), (x, w)), ((), (y, x)), ((x,), (y, w)), ((x, w), (y, u, v)),
                    ])
    return None


RULES = [
    br_leaf_not2, br_leaf_parent_not2, br_parent_leafs, br_p2_v_not2, br_p2_parent_leaf, br_2p2,
    br_p3_v_not2, br_p3_parent_leaf, br_p3_p2, br_2p3, br_p4_not2, br_p3_tree,
]


def fallback_branch(state: BranchState) -> Branching:
    """Binary split for a live forest no rule covers, e.g. an isolated edge of two A vertices.

    Same choice as the engine's completion branch, named so the rule histogram keeps forest
    firings apart; EngineStats.completions counts them.
    """
    return Branching("fallback", completion_branch(state).branches)


def weights() -> WeightSet:
    return WeightSet(1.0, settings.INTERVAL_OMEGA, label="forest")


def enumerate_forest(g: Graph, stats: Optional[EngineStats] = None, **engine) -> Iterator[RomanFunction]:
    """Every minimal rdf of the forest g."""
    if not is_forest(g):
        cycles = g.m - g.n + len(connected_components(g))
        raise ClassMismatchError("forest", f"{cycles} independent cycle(s)")
    logger.debug("Forest n=%d m=%d with %d components", g.n, g.m, len(connected_components(g)))
    declared = {v.name: v for v in load_ruleset("forest")}
    yield from run(
        initial_state(g), RULES, ruleset="forest", weights=weights(), declared=declared,
        stats=stats, fallback=fallback_branch, **engine,
    )
