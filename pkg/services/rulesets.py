"""Built-in branching-vector rule sets in the vector DSL.

Interval and forest vectors use the single weight `w` (the V̄2 weight, V̄1 weight fixed at 1).
Chordal vectors use `w1` and `w2`. `k*(expr)` repeats expr k times for k = 1..family cap.
"""

INTERVAL = """
# leftmost-vertex rules
BRDom: (1, 1+w)
BRNotDominatable: (1+w, 1)
BRP0: (3, 1-w)
BR_P2TildeV2: (2+w, 2+w, 2-w)
BR_P1: (2+2*(1-w), 1-w)
BR_P2single: (3-w, 2-w, 4, 4)
BRP3: (3-w, 2-w, 3, 5-w)
BR_TildeV2: (k*(w+k), w+(1-w)*k)
# bare live components the rules above leave uncovered
BR_IsolatedP2: (2, 2, 2)
BR_IsolatedP3: (3, 3, 3, 3)
"""

FOREST = """
BRLeafnot2: (1+w, 1)
BRLeafParentnot2: (1+w, 1)
BRParentLeafs: (3, 3, 3, 3-w)
BRP2vnot2: (2+w, 2, 2)
BRP2ParentLeaf: (3-w, 3-w, 2-w)
BR2P2: (5, 5, 5, 5, 3, 5, 5-w, 5-w, 5, 5-w, 5-w)
BRP3vnot2: (2, 3, 2-w)
BRP3ParentLeaf: (2, 4-w, 4-w, 4-w, 4-w)
BRP3P2: (5-w, 4, 4, 5-w, 4, 4-w, 4-w, 4-w)
BR2P3: (6, 5-w, 4-w, 3, 3-w, 3-w)
BRP4not2: (4+w, 2+w, 4, 4, 4, 3-w)
BRP3Tree: (3-w, 2-w, 3, 5-w)
"""

CHORDAL = """
3-in-A: (1-w2, 1+3*min(1-w1, w2))
A-with-one-notV2-and-one-special-notV1: (1+w1+w2, 1-w2)
2-not-in-V1-bar: (w1, w1+2*w2)
2-not-in-V1-bar-a: (w1, w1+min(1-w1, w2)+2*(1-w1))
simp-not-in-V1: (w1, 2*w1+w2)
pendant-adjacent: (w1+w2, w1+w2)
pendant-in-A-1: (1+w2, 1+w2)
pendant-in-A-1-a: (1+w2+min(1-w2, w1), 1)
pendant-in-A-2: (2, 1-w2)
pendant-not-in-V2: (1+w2, 1)
pendant-not-in-V1-activ: (1+w1+2*(1-w2), w1)
simp-non-pendant-in-A-1: (1+2*w2, 1)
simp-non-pendant-in-A-2: (2+w2, 1-w2)
simp-non-pandant-not-in-V2-1: (1+w2, 1+w2)
simp-non-pandant-not-in-V2-2: (2-w1+w2, 2+w2, 2-w2)
simp-non-pendant-not-in-V2-3: (w1, 2*w1+w2)
semi-simp: (2-w1+w2, 2+w2, 2-w2)
"""

# Split / cobipartite search; the V2 ⊆ I case mirrors the clique case.
SPLIT = """
clique-vertex-two-private: (3, 1)
clique-vertex-shared-private: (3, 1)
clique-vertex-sole-private: (2, 2)
independent-vertex-two-private: (3, 1)
independent-vertex-shared-private: (3, 1)
independent-vertex-sole-private: (2, 2)
"""

RULESETS = {
    "interval": INTERVAL,
    "forest": FOREST,
    "chordal": CHORDAL,
    "split": SPLIT,
}

# Alternative printed forms of the same vectors; the analyzer checks they agree.
ALTERNATE_FORMS = {
    "BR_P1": "(4-2*w, 1-w)",
    "2-not-in-V1-bar-a": "(w1, 2-w1+min(1-w1, w2))",
}
