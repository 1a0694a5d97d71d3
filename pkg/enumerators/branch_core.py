"""Branch-and-reduce engine shared by every class enumerator.

A BranchState records, per vertex, whether it is decided in V2, decided out of V2 or still
undecided, plus the "value 1" and "must be dominated" marks. The labels A / V̄1 / V̄2 / V0
and the finalized values 0 / 1 / 2 are derived from that record (see Label).
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator, Optional

from config import settings
from core.errors import AuditViolation, StuckStateError
from core.models import Graph, RomanFunction, WeightSet
from services.rdf_service import from_v2, is_minimal_rdf

logger = logging.getLogger(__name__)

UNDECIDED, IN, OUT = 0, 1, 2
_AUDIT_TOL = 1e-9


class Label(str, Enum):
    TWO = "2"
    ONE = "1"
    ZERO = "0"
    V0 = "V0"
    NOT2 = "N2"
    NOT1 = "N1"
    A = "A"


LIVE = frozenset({Label.A, Label.NOT1, Label.NOT2, Label.V0})
UNDECIDED_LABELS = frozenset({Label.A, Label.NOT1})


class BranchState:
    """Search-tree node. Mutated in place by the set_* operations; copy() before branching."""

    __slots__ = ("g", "decision", "no_dom", "must_dom", "dom_count")

    def __init__(self, g: Graph):
        self.g = g
        self.decision = [UNDECIDED] * g.n
        self.no_dom = [False] * g.n
        self.must_dom = [False] * g.n
        self.dom_count = [0] * g.n

    def copy(self) -> "BranchState":
        other = BranchState.__new__(BranchState)
        other.g = self.g
        other.decision = self.decision[:]
        other.no_dom = self.no_dom[:]
        other.must_dom = self.must_dom[:]
        other.dom_count = self.dom_count[:]
        return other

    # -- derived labels ------------------------------------------------------

    def label(self, v: int) -> Label:
        d = self.decision[v]
        if d == IN:
            return Label.TWO
        if d == OUT:
            if self.no_dom[v]:
                return Label.ONE
            if self.dom_count[v]:
                return Label.ZERO
            return Label.V0 if self.must_dom[v] else Label.NOT2
        return Label.NOT1 if self.dom_count[v] else Label.A

    def is_live(self, v: int) -> bool:
        return self.label(v) in LIVE

    def is_undecided(self, v: int) -> bool:
        return self.decision[v] == UNDECIDED

    def vertices(self, *labels: Label) -> list[int]:
        wanted = set(labels)
        return [v for v in self.g.vertices if self.label(v) in wanted]

    def live_vertices(self) -> list[int]:
        return [v for v in self.g.vertices if self.is_live(v)]

    def live_neighbors(self, v: int, *labels: Label) -> list[int]:
        """Live neighbours of v in ascending order, optionally restricted to the given labels."""
        wanted = set(labels) if labels else LIVE
        return [u for u in self.g.sorted_neighbors[v] if self.label(u) in wanted]

    def live_degree(self, v: int) -> int:
        return len(self.live_neighbors(v))

    def is_live_simplicial(self, v: int) -> bool:
        nbrs = self.live_neighbors(v)
        return all(nbrs[j] in self.g.adjacency[nbrs[i]] for i in range(len(nbrs)) for j in range(i + 1, len(nbrs)))

    def undecided_count(self) -> int:
        return sum(1 for d in self.decision if d == UNDECIDED)

    def is_leaf(self) -> bool:
        return UNDECIDED not in self.decision

    def v2(self) -> list[int]:
        return [v for v in self.g.vertices if self.decision[v] == IN]

    def text(self) -> str:
        return " ".join(f"{v}:{self.label(v).value}" for v in self.g.vertices)

    # -- transitions ---------------------------------------------------------

    def set_two(self, v: int) -> bool:
        if self.decision[v] == IN:
            return True
        if self.decision[v] == OUT or any(self.no_dom[u] for u in self.g.adjacency[v]):
            return False
        self.decision[v] = IN
        for u in self.g.adjacency[v]:
            self.dom_count[u] += 1
        return True

    def set_out(self, v: int) -> bool:
        if self.decision[v] == IN:
            return False
        self.decision[v] = OUT
        return True

    def set_one(self, v: int) -> bool:
        """Finalize value 1: v stays out of N[V2]."""
        if self.decision[v] == IN or self.dom_count[v] or self.must_dom[v]:
            return False
        self.decision[v] = OUT
        self.no_dom[v] = True
        for u in self.g.adjacency[v]:
            self.decision[u] = OUT
        return True

    def set_zero(self, v: int) -> bool:
        """Value 0: out of V2 and, while undominated, waiting in V0."""
        if self.no_dom[v] or not self.set_out(v):
            return False
        if not self.dom_count[v]:
            self.must_dom[v] = True
        return True


def initial_state(g: Graph, outs: Iterable[int] = ()) -> BranchState:
    state = BranchState(g)
    for v in outs:
        state.set_out(v)
    return state


def measure(state: BranchState, weights: WeightSet) -> float:
    """|A| + w1·|V̄1| + w2·|V̄2|; V0 vertices weigh nothing."""
    total = 0.0
    for v in state.g.vertices:
        lab = state.label(v)
        if lab is Label.A:
            total += 1.0
        elif lab is Label.NOT1:
            total += weights.w1
        elif lab is Label.NOT2:
            total += weights.w2
    return total


def reduce(state: BranchState) -> Optional[BranchState]:
    """Apply the reduction rules to a fixed point in place; None if the state is dead.

    1. V̄2 vertex without undecided neighbour: finalize 1.
    2. V0 vertex without undecided neighbour: nobody can dominate it any more, dead.
    3. undecided vertex without neighbour in A ∪ V̄2 ∪ V0: it could never have a private
       neighbour, so it leaves V2 (A goes to V̄2, V̄1 becomes 0).
    """
    g = state.g
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            lab = state.label(v)
            if lab is Label.NOT2 or lab is Label.V0:
                if any(state.decision[u] == UNDECIDED for u in g.adjacency[v]):
                    continue
                if lab is Label.V0:
                    return None
                state.set_one(v)
                changed = True
            elif lab in UNDECIDED_LABELS:
                if not any(state.label(u) in (Label.A, Label.NOT2, Label.V0) for u in g.adjacency[v]):
                    state.set_out(v)
                    changed = True
    return state


# ---------------------------------------------------------------------------
# Branchings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Branch:
    """One child: vertices put into V2, finalized 1, set to 0, or just kept out of V2."""
    twos: tuple[int, ...] = ()
    outs: tuple[int, ...] = ()
    ones: tuple[int, ...] = ()
    zeros: tuple[int, ...] = ()


def branch(twos: Iterable[int] = (), outs: Iterable[int] = (), ones: Iterable[int] = (),
           zeros: Iterable[int] = ()) -> Branch:
    return Branch(tuple(twos), tuple(outs), tuple(ones), tuple(zeros))


@dataclass(frozen=True)
class Branching:
    rule: str
    branches: tuple[Branch, ...]
    k: Optional[int] = None


Rule = Callable[[BranchState], Optional[Branching]]


def apply_branch(state: BranchState, b: Branch) -> Optional[BranchState]:
    child = state.copy()
    ok = (
        all(child.set_two(v) for v in b.twos)
        and all(child.set_one(v) for v in b.ones)
        and all(child.set_zero(v) for v in b.zeros)
        and all(child.set_out(v) for v in b.outs)
    )
    if not ok:
        return None
    return reduce(child)


def completion_branch(state: BranchState) -> Branching:
    """IN | OUT on the undecided vertex of maximum live degree (smallest id on ties)."""
    candidates = [v for v in state.g.vertices if state.is_undecided(v)]
    v = max(candidates, key=lambda u: (state.live_degree(u), -u))
    return Branching("completion", (branch(twos=(v,)), branch(outs=(v,))))


@dataclass
class EngineStats:
    ruleset: str = ""
    nodes: int = 0
    leaves: int = 0
    emitted: int = 0
    pruned: int = 0
    rules: Counter = field(default_factory=Counter)
    completions: int = 0
    audit_violations: int = 0
    duplicate_leaves: int = 0

    def merge(self, other: "EngineStats"):
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.emitted += other.emitted
        self.pruned += other.pruned
        self.rules.update(other.rules)
        self.completions += other.completions
        self.audit_violations += other.audit_violations
        self.duplicate_leaves += other.duplicate_leaves

    def summary(self) -> str:
        fired = ", ".join(f"{name}={count}" for name, count in sorted(self.rules.items()))
        return (
            f"ruleset={self.ruleset} nodes={self.nodes} leaves={self.leaves} emitted={self.emitted} "
            f"pruned={self.pruned} completions={self.completions} audit_violations={self.audit_violations} "
            f"duplicate_leaves={self.duplicate_leaves} rules=[{fired}]"
        )


def _select(state: BranchState, rules: list[Rule]) -> Optional[Branching]:
    for rule in rules:
        found = rule(state)
        if found is not None:
            return found
    return None


class _Auditor:
    """Compares measure drops of a branching with the declared vector of its rule."""

    def __init__(self, declared: dict, weights: WeightSet, stats: EngineStats, strict: bool):
        from services.analysis_service import evaluate
        self._evaluate = evaluate
        self.declared = declared
        self.weights = weights
        self.stats = stats
        self.strict = strict
        self._entries: dict[tuple[str, int], list[float]] = {}

    def entries(self, rule: str, k: Optional[int]) -> Optional[list[float]]:
        vector = self.declared.get(rule)
        if vector is None:
            return None
        key = (rule, k or 1)
        if key not in self._entries:
            self._entries[key] = self._evaluate(vector, self.weights, k or 1)
        return self._entries[key]

    def check(self, parent: BranchState, branching: Branching, children: list[Optional[BranchState]]):
        entries = self.entries(branching.rule, branching.k)
        if entries is None or None in children or len(entries) != len(children):
            return
        before = measure(parent, self.weights)
        drops = [before - measure(c, self.weights) for c in children]
        if all(d >= e - _AUDIT_TOL for d, e in zip(drops, entries)):
            return
        if all(d >= e - _AUDIT_TOL for d, e in zip(sorted(drops), sorted(entries))):
            return
        self.stats.audit_violations += 1
        message = (
            f"{self.stats.ruleset}: rule {branching.rule} dropped {[round(d, 6) for d in drops]}, "
            f"declared {[round(e, 6) for e in entries]} at state {parent.text()}"
        )
        logger.warning("Measure audit: %s", message)
        if self.strict:
            raise AuditViolation(message)


def run(state: BranchState, rules: list[Rule], ruleset: str = "", weights: Optional[WeightSet] = None,
        declared: Optional[dict] = None, prune: Optional[Callable[[BranchState], bool]] = None,
        leaf_filter: Optional[Callable[[list[int]], bool]] = None, stats: Optional[EngineStats] = None,
        strict: Optional[bool] = None, audit: Optional[bool] = None,
        check: Optional[Callable[[BranchState], None]] = None,
        fallback: Optional[Callable[[BranchState], Branching]] = completion_branch) -> Iterator[RomanFunction]:
    """Depth-first branch and reduce; yields every leaf function that is a minimal rdf.

    declared maps rule names to BranchingVectors for the debug measure audit. prune is an
    optional extendibility predicate evaluated before branching; check runs on every inner
    node in audit mode. fallback branches on a state no rule covers; without one, or in strict
    mode, such a state raises StuckStateError.
    """
    strict = settings.STRICT_RULES if strict is None else strict
    audit = settings.DEBUG_AUDIT if audit is None else audit
    weights = weights or WeightSet()
    stats = stats if stats is not None else EngineStats(ruleset=ruleset)
    stats.ruleset = stats.ruleset or ruleset
    auditor = _Auditor(declared or {}, weights, stats, strict) if audit and declared else None
    seen: set[frozenset[int]] = set()
    g = state.g

    root = reduce(state.copy())
    stack = [root] if root is not None else []
    if root is None:
        stats.pruned += 1
    while stack:
        node = stack.pop()
        stats.nodes += 1
        if node.is_leaf():
            stats.leaves += 1
            twos = node.v2()
            if audit:
                key = frozenset(twos)
                if key in seen:
                    stats.duplicate_leaves += 1
                    logger.warning("%s: duplicate leaf with V2=%s", ruleset, sorted(key))
                    if strict:
                        raise AuditViolation(f"{ruleset}: duplicate leaf with V2={sorted(key)}")
                seen.add(key)
            if leaf_filter is not None and not leaf_filter(twos):
                continue
            f = from_v2(g, twos)
            if is_minimal_rdf(g, f):
                stats.emitted += 1
                yield f
            continue

        if prune is not None and not prune(node):
            stats.pruned += 1
            continue
        if audit and check is not None:
            check(node)

        branching = _select(node, rules)
        if branching is None:
            if strict or fallback is None:
                raise StuckStateError(ruleset, node.text())
            stats.completions += 1
            logger.warning("%s: no rule applies, fallback branch at state %s", ruleset, node.text())
            branching = fallback(node)
        stats.rules[branching.rule] += 1

        children = [apply_branch(node, b) for b in branching.branches]
        if auditor is not None:
            auditor.check(node, branching, children)
        remaining = node.undecided_count()
        feasible = []
        for child in children:
            if child is None:
                stats.pruned += 1
            elif child.undecided_count() >= remaining:
                raise RuntimeError(f"{ruleset}: rule {branching.rule} made no progress at state {node.text()}")
            else:
                feasible.append(child)
        stack.extend(reversed(feasible))

    logger.debug("Engine finished: %s", stats.summary())
