"""Measure-and-Conquer analysis: branching numbers, rule-set tables, weight optimization.

Vectors are written in a small DSL, one rule per line:

    BRDom: (1, 1+w)
    BR_TildeV2: (k*(w+k), w+(1-w)*k)

Entries are expressions in w (alias of w2), w1, w2 and k with min/max; `k*(expr)` as a whole
entry repeats expr k times and makes the rule a family expanded for k = 1..family_cap.
"""

import logging
import math
import re
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
import sympy as sp
from scipy import optimize

from config import settings
from core.errors import VectorParseError
from core.models import WeightSet
from services import rulesets

logger = logging.getLogger(__name__)

W1, W2, K = sp.symbols("w1 w2 k")
_LOCALS = {"w": W2, "w1": W1, "w2": W2, "k": K, "min": sp.Min, "max": sp.Max}
_NUMPY_MODULES = [{"Min": np.minimum, "Max": np.maximum}, "numpy"]
_REPEAT = re.compile(r"^\s*k\s*\*\s*\((.*)\)\s*$")
_LINE = re.compile(r"^\s*([^:]+?)\s*:\s*(\(.*\))\s*$")


@dataclass(frozen=True)
class VectorEntry:
    expr: sp.Expr
    repeated: bool = False


@dataclass(frozen=True)
class BranchingVector:
    name: str
    entries: tuple[VectorEntry, ...]
    text: str = ""

    @property
    def is_family(self) -> bool:
        return any(K in e.expr.free_symbols or e.repeated for e in self.entries)

    def expand(self, k: int) -> list[sp.Expr]:
        out = []
        for e in self.entries:
            expr = e.expr.subs(K, k)
            out.extend([expr] * (k if e.repeated else 1))
        return out


@dataclass
class RulesetAnalysis:
    weights: WeightSet
    numbers: dict[str, float] = field(default_factory=dict)
    worst_rule: str = ""
    worst: float = 1.0


@dataclass
class Sqrt3Check:
    omega: float
    rows: list[tuple[int, float]]
    bound: float
    offending: list[int]

    @property
    def passed(self) -> bool:
        return not self.offending


# ---------------------------------------------------------------------------
# DSL
# ---------------------------------------------------------------------------

def _split_top_level(body: str) -> list[str]:
    parts, depth, current = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses")
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ValueError("unbalanced parentheses")
    parts.append("".join(current))
    return [p.strip() for p in parts]


def _parse_expr(text: str) -> sp.Expr:
    try:
        expr = sp.sympify(text, locals=_LOCALS)
    except (sp.SympifyError, SyntaxError, TypeError) as e:
        raise ValueError(f"cannot parse {text!r}: {e}") from None
    unknown = expr.free_symbols - {W1, W2, K}
    if unknown:
        raise ValueError(f"unknown symbol(s) {', '.join(sorted(map(str, unknown)))} in {text!r}")
    return expr


def parse_vector(text: str, name: str = "", line: Optional[int] = None) -> BranchingVector:
    """Parse '(e1, e2, ...)' into a BranchingVector."""
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise VectorParseError("vector must be written as '(e1, e2, ...)'", line)
    try:
        raw_entries = _split_top_level(stripped[1:-1])
        if not all(raw_entries):
            raise ValueError("empty entry")
        entries = []
        for raw in raw_entries:
            m = _REPEAT.match(raw)
            if m:
                entries.append(VectorEntry(_parse_expr(m.group(1)), repeated=True))
            else:
                entries.append(VectorEntry(_parse_expr(raw)))
    except ValueError as e:
        raise VectorParseError(str(e), line) from None
    return BranchingVector(name=name, entries=tuple(entries), text=stripped)


def parse_vectors(text: str) -> list[BranchingVector]:
    """Parse a DSL document: 'name: (entries)' lines, '#' comments and blank lines ignored."""
    vectors = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _LINE.match(line)
        if not m:
            raise VectorParseError("expected 'name: (e1, e2, ...)'", number)
        vectors.append(parse_vector(m.group(2), name=m.group(1), line=number))
    if not vectors:
        raise VectorParseError("no vectors found")
    return vectors


def load_ruleset(name: str) -> list[BranchingVector]:
    if name not in rulesets.RULESETS:
        raise ValueError(f"Unknown ruleset '{name}'. Known: {', '.join(rulesets.RULESETS)}")
    return parse_vectors(rulesets.RULESETS[name])


def default_weights(ruleset: str) -> WeightSet:
    if ruleset == "chordal":
        return WeightSet(settings.CHORDAL_OMEGA1, settings.CHORDAL_OMEGA2, label="chordal")
    if ruleset in ("interval", "forest"):
        return WeightSet(1.0, settings.INTERVAL_OMEGA, label=ruleset)
    return WeightSet(1.0, 1.0, label=ruleset)


def evaluate(vector: BranchingVector, weights: WeightSet, k: int = 1) -> list[float]:
    subs = {W1: weights.w1, W2: weights.w2}
    return [float(sp.N(expr.subs(subs))) for expr in vector.expand(k)]


# ---------------------------------------------------------------------------
# Branching numbers
# ---------------------------------------------------------------------------

def _scalar_root(entries: Sequence[float]) -> float:
    a = np.asarray(entries, dtype=float)
    if a.size == 0:
        raise ValueError("empty branching vector")
    if (a <= 0).any():
        raise ValueError(f"branching vector entries must be positive, got {list(a)}")
    if a.size == 1:
        return 1.0

    def excess(x: float) -> float:
        return float(np.exp(-a * math.log(x)).sum()) - 1.0

    hi = 4.0
    while excess(hi) > 0:
        hi *= 2.0
    if excess(hi) == 0:
        return hi
    return float(optimize.bisect(excess, 1.0, hi, xtol=settings.BISECT_XTOL))


def branching_number(vector, weights: Optional[WeightSet] = None,
                     family_cap: Optional[int] = None) -> float:
    """Unique x > 1 with sum x^(-a_i) = 1 (1.0 for a single entry).

    Accepts plain numbers or a BranchingVector; families report the maximum over k.
    """
    if not isinstance(vector, BranchingVector):
        return _scalar_root(vector)
    weights = weights or WeightSet()
    if not vector.is_family:
        return _scalar_root(evaluate(vector, weights))
    cap = family_cap or settings.FAMILY_CAP
    return max(_scalar_root(evaluate(vector, weights, k)) for k in range(1, cap + 1))


def _grid_roots(entries: np.ndarray) -> np.ndarray:
    """Vectorized bisection; entries has shape (m, G). Nonpositive entries give inf."""
    m = entries.shape[0]
    valid = (entries > 0).all(axis=0)
    if m == 1:
        return np.where(valid, 1.0, np.inf)
    a = np.where(valid, entries, 1.0)

    def excess(x: np.ndarray) -> np.ndarray:
        return np.exp(-a * np.log(x)).sum(axis=0) - 1.0

    lo = np.ones(entries.shape[1])
    hi = np.full(entries.shape[1], 4.0)
    for _ in range(256):
        grow = excess(hi) > 0
        if not grow.any():
            break
        hi = np.where(grow, hi * 2.0, hi)
    for _ in range(64):
        mid = (lo + hi) / 2.0
        above = excess(mid) > 0
        lo = np.where(above, mid, lo)
        hi = np.where(above, hi, mid)
    return np.where(valid, hi, np.inf)


def _numeric_entries(exprs: list[sp.Expr], w1: np.ndarray, w2: np.ndarray) -> np.ndarray:
    rows = []
    for expr in exprs:
        fn = sp.lambdify((W1, W2), expr, modules=_NUMPY_MODULES)
        rows.append(np.broadcast_to(np.asarray(fn(w1, w2), dtype=float), w1.shape))
    return np.vstack(rows)


def grid_numbers(vector: BranchingVector, w1: np.ndarray, w2: np.ndarray,
                 family_cap: Optional[int] = None) -> np.ndarray:
    """Branching number of one rule at every grid point (w1[i], w2[i])."""
    if not vector.is_family:
        return _grid_roots(_numeric_entries(vector.expand(1), w1, w2))
    cap = family_cap or settings.FAMILY_CAP
    worst = np.ones(w1.shape)
    for k in range(1, cap + 1):
        worst = np.maximum(worst, _grid_roots(_numeric_entries(vector.expand(k), w1, w2)))
    return worst


# ---------------------------------------------------------------------------
# Rule sets
# ---------------------------------------------------------------------------

def analyze_ruleset(rules: list[BranchingVector], weights: WeightSet,
                    family_cap: Optional[int] = None) -> RulesetAnalysis:
    analysis = RulesetAnalysis(weights=weights)
    for vector in rules:
        number = branching_number(vector, weights, family_cap)
        analysis.numbers[vector.name] = number
        if number > analysis.worst or not analysis.worst_rule:
            analysis.worst, analysis.worst_rule = number, vector.name
    logger.debug("Worst rule %s at %.6f", analysis.worst_rule, analysis.worst)
    return analysis


def alternate_forms(ruleset: str, weights: WeightSet) -> list[tuple[str, float, float, bool]]:
    """(rule, stored-form number, alternate-form number, symbolically equal) per known alternate form."""
    stored = {v.name: v for v in load_ruleset(ruleset)}
    report = []
    for name, text in rulesets.ALTERNATE_FORMS.items():
        if name not in stored:
            continue
        other = parse_vector(text, name=name)
        a, b = stored[name].expand(1), other.expand(1)
        same = len(a) == len(b) and all(sp.simplify(x - y) == 0 for x, y in zip(a, b))
        report.append((name, branching_number(stored[name], weights), branching_number(other, weights), same))
    return report


def _axis(lo: float, hi: float, step: float) -> np.ndarray:
    if hi <= lo:
        return np.array([lo])
    count = int(round((hi - lo) / step)) + 1
    return np.linspace(lo, hi, count)


def _worst_on_grid(rules: list[BranchingVector], w1: np.ndarray, w2: np.ndarray,
                   family_cap: Optional[int]) -> np.ndarray:
    worst = np.ones(w1.shape)
    for vector in rules:
        worst = np.maximum(worst, grid_numbers(vector, w1, w2, family_cap))
    return worst


def optimize_weights(rules: list[BranchingVector],
                     bounds: tuple[tuple[float, float], tuple[float, float]] = ((0.0, 1.0), (0.0, 1.0)),
                     grid_step: Optional[float] = None, refine_step: Optional[float] = None,
                     family_cap: Optional[int] = None) -> tuple[WeightSet, float]:
    """Coarse grid, then a fine grid one coarse step around the best point; minimizes the worst number."""
    grid_step = grid_step or settings.GRID_STEP
    refine_step = refine_step or settings.REFINE_STEP
    for lo, hi in bounds:
        if not 0.0 <= lo <= hi <= 1.0:
            raise ValueError(f"weight bounds must lie in [0, 1], got ({lo}, {hi})")

    def search(box, step):
        a1, a2 = np.meshgrid(_axis(*box[0], step), _axis(*box[1], step), indexing="ij")
        w1, w2 = a1.ravel(), a2.ravel()
        worst = _worst_on_grid(rules, w1, w2, family_cap)
        best = int(np.argmin(worst))
        return float(w1[best]), float(w2[best]), float(worst[best])

    b1, b2, coarse = search(bounds, grid_step)
    window = tuple(
        (max(lo, centre - grid_step), min(hi, centre + grid_step))
        for (lo, hi), centre in zip(bounds, (b1, b2))
    )
    r1, r2, fine = search(window, refine_step)
    if fine > coarse:
        r1, r2, fine = b1, b2, coarse
    logger.info("Optimum worst %.6f at w1=%.4f w2=%.4f (coarse %.6f)", fine, r1, r2, coarse)
    return WeightSet(min(max(r1, 0.0), 1.0), min(max(r2, 0.0), 1.0), label="optimized"), fine


def default_bounds(ruleset: str) -> tuple[tuple[float, float], tuple[float, float]]:
    """Interval and forest measures keep the V̄1 weight at 1."""
    if ruleset in ("interval", "forest"):
        return (1.0, 1.0), (0.0, 1.0)
    return (0.0, 1.0), (0.0, 1.0)


def verify_sqrt3_family(n_max: int, omega: Optional[float] = None) -> Sqrt3Check:
    """(w+n repeated n times, w+(1-w)n) stays at or below sqrt(3) for n = 1..n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    omega = settings.INTERVAL_OMEGA if omega is None else omega
    bound = math.sqrt(3.0)
    rows, offending = [], []
    for n in range(1, n_max + 1):
        number = _scalar_root([omega + n] * n + [omega + (1 - omega) * n])
        rows.append((n, number))
        if number > bound + 1e-9:
            offending.append(n)
    return Sqrt3Check(omega=omega, rows=rows, bound=bound, offending=offending)
