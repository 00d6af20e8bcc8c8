from typing import Dict, List, Optional, Tuple, Any
from pydantic import BaseModel, ConfigDict, Field, field_validator
from datetime import datetime
from enum import Enum


INFINITY = float("inf")


class SSequence(BaseModel):
    """Non-decreasing positive integer sequence; classes are positions 1..k"""
    values: Tuple[int, ...] = Field(..., description="(s_1, ..., s_k)")

    model_config = ConfigDict(frozen=True)

    @field_validator("values")
    @classmethod
    def _check_values(cls, values: Tuple[int, ...]) -> Tuple[int, ...]:
        # imported here to keep schemas free of import cycles
        from ..errors import EmptySequence, NonPositive, NotNonDecreasing

        if not values:
            raise EmptySequence()
        for value in values:
            if not isinstance(value, int) or value < 1:
                raise NonPositive(value)
        if any(a > b for a, b in zip(values, values[1:])):
            raise NotNonDecreasing(values)
        return values

    @property
    def k(self) -> int:
        return len(self.values)

    def value(self, cls: int) -> int:
        """Distance bound of 1-based class ``cls``"""
        return self.values[cls - 1]

    def classes_with_value(self, value: int) -> List[int]:
        return [i + 1 for i, s in enumerate(self.values) if s == value]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


class PackingColoring(BaseModel):
    """Total mapping vertex -> 1-based class index"""
    assignment: Tuple[int, ...] = Field(..., description="assignment[v] is the class of vertex v")

    model_config = ConfigDict(frozen=True)

    @field_validator("assignment")
    @classmethod
    def _positive(cls, assignment: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(c < 1 for c in assignment):
            raise ValueError("class indices are 1-based")
        return assignment

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def members(self, cls: int) -> List[int]:
        return [v for v, c in enumerate(self.assignment) if c == cls]


class Violation(BaseModel):
    cls: int = Field(..., description="Shared 1-based class index")
    u: int
    v: int
    distance: int = Field(..., description="dist(u, v), at most s_cls")


class ClassProfile(BaseModel):
    max_degree: int
    min_degree: int
    saturation: int = Field(..., ge=0, le=3, description="Smallest k with G k-saturated")
    three_k: int = Field(..., ge=0, le=3, description="Smallest k with G (3,k)-saturated")
    girth_profile: List[float] = Field(default_factory=list, description="g(v) per vertex, inf if on no cycle")
    g3: float = Field(..., description="max g(v) over 3-vertices; 0 without 3-vertices")
    had_three_vertex: bool = False
    claw_free: bool = True
    diamond: Optional[Tuple[int, int, int, int]] = None
    heavy: List[int] = Field(default_factory=list)
    rich: List[int] = Field(default_factory=list)
    connected: bool = True


class ClassConstraint(BaseModel):
    """Conjunction of profile bounds; None means unconstrained"""
    saturation_max: Optional[int] = None
    three_k_max: Optional[int] = None
    g3_min: Optional[float] = None
    g3_max: Optional[float] = None
    max_degree_max: Optional[int] = None
    claw_free: Optional[bool] = None
    cubic: Optional[bool] = None
    diamond_free: Optional[bool] = None

    model_config = ConfigDict(frozen=True)

    def label(self) -> str:
        parts = []
        if self.saturation_max is not None:
            parts.append(f"saturation<={self.saturation_max}")
        if self.three_k_max is not None:
            parts.append(f"(3,k)<={self.three_k_max}")
        if self.g3_min is not None and self.g3_min == self.g3_max:
            parts.append(f"g3={int(self.g3_min)}")
        else:
            if self.g3_min is not None:
                parts.append(f"g3>={int(self.g3_min)}")
            if self.g3_max is not None:
                parts.append(f"g3<={int(self.g3_max)}")
        if self.max_degree_max is not None:
            parts.append(f"delta<={self.max_degree_max}")
        if self.claw_free:
            parts.append("claw-free")
        if self.cubic:
            parts.append("cubic")
        if self.diamond_free:
            parts.append("diamond-free")
        return " ".join(parts) or "subcubic"


class SolveStatus(str, Enum):
    COLORABLE = "colorable"
    NOT_COLORABLE = "not_colorable"
    TIMEOUT = "timeout"


class SolveConfig(BaseModel):
    node_budget: int = Field(100_000_000, gt=0, description="Search nodes before giving up")
    time_budget: Optional[float] = Field(None, gt=0, description="Wall-clock seconds before giving up")
    symmetry_breaking: bool = Field(True, description="Order equal-value classes by first use")
    workers: int = Field(1, ge=1, description="Processes for top-level branches; 1 is single-threaded")


class SolveOutcome(BaseModel):
    status: SolveStatus
    coloring: Optional[PackingColoring] = None
    nodes: int = Field(0, description="Search nodes spent")
    elapsed: float = 0.0

    model_config = ConfigDict(use_enum_values=True)

    @property
    def colorable(self) -> bool:
        return self.status == SolveStatus.COLORABLE


class ColorerResult(BaseModel):
    coloring: PackingColoring
    sequence: SSequence
    colorer: str = Field(..., description="Name of the colorer that produced the coloring")
    trace: List[str] = Field(default_factory=list, description="Reduction steps, in order")
    good_flags: Dict[str, bool] = Field(default_factory=dict, description="Restricted-class usage checks")
    used_fallback: bool = Field(False, description="Some component was completed by exact search")
    repaired: bool = Field(False, description="Some component was patched by local search")


class CyclePathKind(str, Enum):
    CYCLE = "cycle"
    PATH = "path"


class PathDecomposition(BaseModel):
    y: List[int] = Field(..., description="The 2-packing")
    paths: List[List[int]] = Field(..., description="Components of G - Y, each in path order")
    trace: List[str] = Field(default_factory=list)


class PackingPair(BaseModel):
    x: List[int]
    y: List[int]
    weights: Tuple[int, int, int] = (4, 2, 1)
    theta: int
    gamma: int


class ExtensionPair(BaseModel):
    pair: PackingPair
    xt: List[int]
    yt: List[int]
    phi: int
    dominated_cycle: Optional[List[int]] = Field(None, description="Odd cycle C with V(G) = N[C], when met")


class TriangleTransversal(BaseModel):
    t: List[int]
    g3t_edges: List[Tuple[int, int]] = Field(default_factory=list, description="Edges of G^3[T], original ids")
    coloring3: Dict[int, int] = Field(default_factory=dict, description="t-vertex -> 0, 1, 2")
    x_reps: List[int] = Field(default_factory=list)


class CatalogFact(BaseModel):
    sequence: SSequence
    colorable: bool
    note: str = ""


class NamedGraph(BaseModel):
    name: str
    n: int
    edges: List[Tuple[int, int]]
    description: str = ""
    expected_profile: Dict[str, Any] = Field(default_factory=dict)
    facts: List[CatalogFact] = Field(default_factory=list)
    witnesses: Dict[str, List[int]] = Field(default_factory=dict, description="S text -> stored coloring")

    def graph(self):
        from ..graph.core import build_graph
        return build_graph(self.n, self.edges)


class GenSpec(BaseModel):
    constraint: ClassConstraint = Field(default_factory=ClassConstraint)
    sizes: Tuple[int, int] = (10, 20)
    seed: int = 0
    max_attempts: int = Field(2000, gt=0)
    connected: bool = True


class CellStatus(str, Enum):
    PROVEN_CONSTRUCTIVE = "proven-constructive"
    PROVEN_WITH_FALLBACK = "proven-with-fallback"
    PROVEN_SOLVER = "proven-solver"
    DISPROVEN = "disproven"
    CONJECTURED = "conjectured"
    CITED = "cited"
    OPEN = "open"
    FAILED = "failed"
    TIMEOUT = "timeout"


class ReportRow(BaseModel):
    class_label: str
    g3_label: str
    sequence: str
    column: str = Field(..., description="proven | disproven | conjectured")
    status: CellStatus
    evidence: str = ""
    passed: int = 0
    total: int = 0
    fallbacks: int = Field(0, description="Instances finished by local repair or exact search")
    seconds: float = 0.0
    timestamp: datetime = Field(default_factory=datetime.now)

    model_config = ConfigDict(use_enum_values=True)

    @property
    def pass_rate(self) -> Optional[float]:
        return self.passed / self.total if self.total else None


class TableEntry(BaseModel):
    """One S-sequence in a result cell"""
    s: str = Field(..., description="S text; a trailing 'k' is instantiated at k_min")
    k_min: Optional[int] = None
    witness: Optional[str] = Field(None, description="Catalog graph refuting the sequence")
    excluded: List[str] = Field(default_factory=list, alias="except")
    cited: bool = Field(False, description="Result of prior work; checked by exact search only")
    within: Optional[ClassConstraint] = Field(None, description="Narrower class the entry is stated for")
    note: str = ""

    model_config = ConfigDict(populate_by_name=True)

    def sequence_text(self) -> str:
        if self.s.endswith("k"):
            return self.s[:-1] + str(self.k_min)
        return self.s


class TableCell(BaseModel):
    row: str
    g3: str
    constraint: ClassConstraint
    proven: List[TableEntry] = Field(default_factory=list)
    disproven: List[TableEntry] = Field(default_factory=list)
    conjectured: List[TableEntry] = Field(default_factory=list)


class Conjecture(BaseModel):
    name: str
    text: str
    constraint: ClassConstraint
    s: Optional[str] = None
    chi_max: Optional[int] = Field(None, description="Packing chromatic number bound, used instead of s")
    excluded: List[str] = Field(default_factory=list, alias="except")

    model_config = ConfigDict(populate_by_name=True)
