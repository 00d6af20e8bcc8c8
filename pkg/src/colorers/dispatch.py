"""Route a (graph, S) request to the constructive colorer that covers it."""
import logging
from typing import Any, Dict, List, Optional, Tuple

from ..data.schemas import ClassConstraint, ColorerResult, SSequence
from ..errors import ExceptionalGraph, ExcludedGraph, NotColorable, OutOfClass, SolverTimeout
from ..graph.classify import classify, profile_satisfies
from ..graph.core import Graph
from ..packing.coloring import make_sequence, refines
from ..solver.exact import decide
from .base import BaseColorer
from .linear import L11K, L122, L1245K, L2222, color_delta2
from .low_saturation import ONE_SAT, ZERO_SAT, LowSaturationColorer, OneSaturatedColorer
from .three_saturated import ThreeOneColorer, ThreeTwoColorer, ThreeZeroColorer
from .two_saturated import TwoSaturatedColorer

logger = logging.getLogger(__name__)

METHODS = ("auto", "constructive", "exact")

PATHS_AND_CYCLES = ClassConstraint(max_degree_max=2)


class LinearColorer(BaseColorer):
    """Paths and cycles by the closed forms; C5 under (1,2,2) and (2,2,2,2) has none"""

    name = "linear"

    def templates(self):
        return [
            (PATHS_AND_CYCLES, (1, 1, 3), 3),
            (PATHS_AND_CYCLES, (1, 2, 2), None),
            (PATHS_AND_CYCLES, (2, 2, 2, 2), None),
            (PATHS_AND_CYCLES, (1, 2, 4, 5, 6), 6),
        ]

    def _construct(self, h: Graph, s: SSequence, trace: List[str]) -> List[int]:
        values = s.values
        if values[:2] == (1, 1):
            scheme = L11K(values[2])
        elif values == (1, 2, 2):
            scheme = L122
        elif values == (2, 2, 2, 2):
            scheme = L2222
        else:
            scheme = L1245K(values[4])
        trace.append(f"linear:{scheme.kind.value}")
        return list(color_delta2(h, scheme).assignment)


# most specific first; the first template a request refines wins
REGISTRY = (
    LinearColorer,
    LowSaturationColorer,
    OneSaturatedColorer,
    TwoSaturatedColorer,
    ThreeZeroColorer,
    ThreeOneColorer,
    ThreeTwoColorer,
)


def _instantiate(pattern: Tuple[int, ...], k_min: Optional[int], s: SSequence) -> Optional[SSequence]:
    """The template sequence that s is weaker than, if any"""
    if len(pattern) != s.k:
        return None
    values = pattern
    if k_min is not None:
        values = pattern[:-1] + (max(k_min, s.values[-1]),)
    candidate = SSequence(values=values)
    return candidate if refines(candidate, s) else None


def find_colorer(g: Graph, s: SSequence,
                 config: Optional[Dict[str, Any]] = None) -> Optional[Tuple[BaseColorer, SSequence]]:
    """First registered colorer whose class holds g and whose sequence refines s"""
    profile = classify(g) if g.n else None
    for factory in REGISTRY:
        colorer = factory(config)
        for constraint, pattern, k_min in colorer.templates():
            template = _instantiate(pattern, k_min, s)
            if template is None:
                continue
            if profile is None or profile_satisfies(profile, constraint):
                return colorer, template
    return None


def _exact(g: Graph, s: SSequence, config: Dict[str, Any]) -> ColorerResult:
    colorer = LinearColorer(config)
    outcome = decide(g, s, colorer.solve_config)
    if outcome.status == "timeout":
        raise SolverTimeout(outcome.nodes, outcome.elapsed)
    if not outcome.colorable:
        raise NotColorable(s.values)
    return ColorerResult(coloring=outcome.coloring, sequence=s, colorer="exact",
                         trace=[f"exact:nodes={outcome.nodes}"])


def auto_color(g: Graph, s, method: str = "auto", config: Optional[Dict[str, Any]] = None) -> ColorerResult:
    """Color g under s by a constructive colorer when one applies, else by exact search"""
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    s = make_sequence(s)
    config = config or {}
    if method == "exact":
        return _exact(g, s, config)

    found = find_colorer(g, s, config)
    if found is None:
        if method == "constructive":
            raise OutOfClass(f"no constructive colorer covers S=({s})", classify(g) if g.n else None)
        return _exact(g, s, config)

    colorer, template = found
    try:
        result = colorer.color(g, template)
    except (ExceptionalGraph, ExcludedGraph) as exc:
        if method == "constructive":
            raise
        logger.info(f"{colorer.name} has no coloring of {exc.name}; trying exact search")
        return _exact(g, s, config)

    trace = list(result.trace)
    if template != s:
        trace.insert(0, f"template:{template}")
    return result.model_copy(update={"sequence": s, "trace": trace})


def packing_number_bound(g: Graph, config: Optional[Dict[str, Any]] = None) -> Optional[Tuple[int, ColorerResult]]:
    """Classes used by a (1,2,3,4,5,6)-coloring of a low-saturation graph, or None off those classes"""
    if g.n == 0:
        return None
    profile = classify(g)
    if not (profile_satisfies(profile, ZERO_SAT) or profile_satisfies(profile, ONE_SAT)):
        return None
    result = LowSaturationColorer(config).color(g, (1, 2, 3, 4, 5, 6))
    return len(set(result.coloring.assignment)), result


def theorem_colorer(g: Graph, s, config: Optional[Dict[str, Any]] = None) -> Optional[BaseColorer]:
    """The colorer stated for exactly this S on a class holding g"""
    s = make_sequence(s)
    profile = classify(g) if g.n else None
    for factory in REGISTRY:
        colorer = factory(config)
        allowed = colorer.constraints(s)
        if allowed and (profile is None or any(profile_satisfies(profile, c) for c in allowed)):
            return colorer
    return None
