"""Exceptions raised by the census services. The CLI maps each to an exit code."""


class GraphParseError(ValueError):
    """Malformed edge-list or interval input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class VectorParseError(GraphParseError):
    """Malformed branching-vector DSL input."""


class ClassMismatchError(ValueError):
    """Input graph is not in the class the enumerator was asked for."""

    def __init__(self, graph_class: str, diagnostics: str = ""):
        self.graph_class = graph_class
        self.diagnostics = diagnostics
        message = f"graph is not {graph_class}"
        if diagnostics:
            message += f" ({diagnostics})"
        super().__init__(message)


class OracleCapExceeded(ValueError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(
            f"oracle refuses graphs of order {n} (cap {cap}); "
            f"raise ROMAN_CENSUS_ORACLE_CAP to override"
        )


class StuckStateError(RuntimeError):
    """No branching rule applies to a reduced, non-leaf state."""

    def __init__(self, ruleset: str, state_text: str):
        self.ruleset = ruleset
        self.state_text = state_text
        super().__init__(f"{ruleset}: no rule applies to state {state_text}")


class AuditViolation(AssertionError):
    """Debug-mode audit failure (measure drop or duplicate leaf)."""
