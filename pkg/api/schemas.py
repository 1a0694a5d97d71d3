"""Pydantic models for the CLI configuration and for every report it prints."""

from typing import Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from config import settings


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

class RunConfig(BaseModel):
    """Validated command-line configuration."""
    command: str = "enumerate"
    input: Optional[str] = None
    intervals: Optional[str] = None
    gen: Optional[str] = None
    size: Optional[int] = None
    graph_class: str = "auto"
    output_format: str = "lines"
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED)
    jobs: int = Field(default_factory=lambda: settings.DEFAULT_JOBS, ge=1)
    strict: bool = False
    debug: bool = False
    oracle_cap: int = Field(default_factory=lambda: settings.ORACLE_CAP, ge=1)

    @field_validator("graph_class")
    @classmethod
    def _known_class(cls, value: str) -> str:
        if value not in settings.GRAPH_CLASSES:
            raise ValueError(f"unknown class '{value}', expected one of {', '.join(settings.GRAPH_CLASSES)}")
        return value

    @field_validator("output_format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in settings.OUTPUT_FORMATS:
            raise ValueError(f"unknown format '{value}', expected one of {', '.join(settings.OUTPUT_FORMATS)}")
        return value

    @model_validator(mode="after")
    def _interval_needs_model(self) -> "RunConfig":
        if self.graph_class == "interval" and self.intervals is None and self.gen not in settings.INTERVAL_FAMILIES:
            raise ValueError("class 'interval' needs --intervals or an interval-bearing generator")
        if self.gen is not None and self.size is None:
            raise ValueError(f"generator '{self.gen}' needs a size (--n or --k)")
        return self


# ---------------------------------------------------------------------------
# Enumeration output
# ---------------------------------------------------------------------------

class FunctionRecord(BaseModel):
    """One JSON line of `enumerate --format json`."""
    f: str = "0201"

    @field_validator("f")
    @classmethod
    def _roman_text(cls, value: str) -> str:
        if any(ch not in "012" for ch in value):
            raise ValueError(f"not a Roman function string: {value!r}")
        return value


# ---------------------------------------------------------------------------
# Analysis
# ---------------------------------------------------------------------------

class RuleReport(BaseModel):
    name: str
    vector: str
    number: float


class AlternateFormReport(BaseModel):
    name: str
    stored_number: float
    alternate_number: float
    symbolically_equal: bool


class RulesetReport(BaseModel):
    ruleset: str
    w1: float
    w2: float
    rules: list[RuleReport] = []
    worst_rule: str = ""
    worst: float = 1.0
    alternate_forms: list[AlternateFormReport] = []

    def to_text(self) -> str:
        width = max((len(r.name) for r in self.rules), default=4)
        lines = [f"# ruleset={self.ruleset} w1={self.w1:.6f} w2={self.w2:.6f}"]
        for r in self.rules:
            lines.append(f"{r.name:<{width}}  {r.vector:<40}  {r.number:.4f}")
        lines.append(f"{'worst':<{width}}  {self.worst_rule:<40}  {self.worst:.4f}")
        for alt in self.alternate_forms:
            lines.append(
                f"# {alt.name}: stored {alt.stored_number:.4f} alternate {alt.alternate_number:.4f} "
                f"equal={alt.symbolically_equal}"
            )
        return "\n".join(lines)


class OptimizationReport(BaseModel):
    ruleset: str
    w1: float
    w2: float
    worst: float
    bounds: tuple[tuple[float, float], tuple[float, float]] = ((0.0, 1.0), (0.0, 1.0))

    def to_text(self) -> str:
        return f"# optimum ruleset={self.ruleset} w1={self.w1:.6f} w2={self.w2:.6f} worst={self.worst:.6f}"


class Sqrt3Row(BaseModel):
    n: int
    number: float


class Sqrt3Report(BaseModel):
    omega: float
    bound: float
    rows: list[Sqrt3Row] = []
    offending: list[int] = []

    @property
    def passed(self) -> bool:
        return not self.offending

    def to_text(self) -> str:
        status = "passed" if self.passed else f"failed for n={self.offending}"
        worst = max((r.number for r in self.rows), default=1.0)
        return f"# sqrt3 family omega={self.omega} n<={len(self.rows)} worst={worst:.6f} bound={self.bound:.6f} {status}"


# ---------------------------------------------------------------------------
# Verification and bench
# ---------------------------------------------------------------------------

class VerifyReport(BaseModel):
    graph_class: str
    n: int
    expected: int
    actual: int
    ok: bool
    missing: list[str] = []
    extra: list[str] = []
    duplicates: list[str] = []
    counterexample: Optional[str] = None
    completions: int = 0
    label: str = ""


class BenchRow(BaseModel):
    family: str
    n: int
    count: int
    wall_time: float
    max_inter_solution_delay: float
    count_root: float = Field(alias="count^(1/n)")

    model_config = {"populate_by_name": True}
