"""Common machinery of the constructive colorers.

A colorer builds a coloring component by component.  Every component's
coloring is checked.  A failed construction raises in strict mode; otherwise
it is repaired locally when few vertices conflict and completed by the exact
solver when repair does not succeed.  Either outcome is recorded on the result.
"""
import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..data import catalog
from ..data.schemas import ClassConstraint, ColorerResult, SolveConfig, SSequence
from ..errors import (
    ExceptionalGraph,
    InternalStructureError,
    K4Component,
    K4Detected,
    OutOfClass,
    PreconditionViolated,
    TooShort,
)
from ..graph.classify import classify, profile_satisfies
from ..graph.core import Graph, connected_components, induced_subgraph
from ..packing.coloring import make_coloring, make_sequence, verify
from ..solver.exact import decide
from .linear import LinearScheme, color_delta2

logger = logging.getLogger(__name__)

# failures of a construction step that the exact solver can make up for
CONSTRUCTION_ERRORS = (InternalStructureError, PreconditionViolated, K4Detected, K4Component, TooShort)

REPAIR_NODES = 20_000
REPAIR_MAX_CONFLICTS = 8


def blocked(h: Graph, s: SSequence, colors: Sequence[int], v: int, c: int) -> bool:
    """Some other vertex of class c lies within distance s_c of v"""
    row = h.distances().matrix[v]
    same = np.asarray(colors) == c
    same[v] = False
    return bool((same & (row >= 1) & (row <= s.value(c))).any())


def first_free(h: Graph, s: SSequence, colors: Sequence[int], v: int,
               candidates: Optional[Iterable[int]] = None) -> Optional[int]:
    for c in candidates if candidates is not None else range(1, s.k + 1):
        if not blocked(h, s, colors, v, c):
            return c
    return None


def conflicts(h: Graph, s: SSequence, colors: Sequence[int]) -> List[int]:
    """Uncolored vertices and vertices sharing a class too closely"""
    bad = {v for v, c in enumerate(colors) if c < 1 or c > s.k}
    for v, c in enumerate(colors):
        if v not in bad and blocked(h, s, colors, v, c):
            bad.add(v)
    return sorted(bad)


def extend(h: Graph, s: SSequence, colors: List[int], vertices: Sequence[int],
           limit: int = REPAIR_NODES) -> bool:
    """Color ``vertices`` (currently 0) by depth-first search; colors is updated in place"""
    todo = list(vertices)
    for v in todo:
        colors[v] = 0
    budget = [limit]

    def step(i: int) -> bool:
        if i == len(todo):
            return True
        v = todo[i]
        for c in range(1, s.k + 1):
            budget[0] -= 1
            if budget[0] < 0:
                return False
            if blocked(h, s, colors, v, c):
                continue
            colors[v] = c
            if step(i + 1):
                return True
        colors[v] = 0
        return False

    if step(0):
        return True
    for v in todo:
        colors[v] = 0
    return False


class BaseColorer(ABC):
    """Base class for all constructive colorers"""

    name = "base"

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config or {}
        self.strict = bool(self.config.get("strict", False))
        self.solve_config = SolveConfig(
            node_budget=self.config.get("node_budget", 100_000_000),
            time_budget=self.config.get("time_budget"),
        )

    @abstractmethod
    def templates(self) -> List[Tuple[ClassConstraint, Tuple[int, ...], Optional[int]]]:
        """(graph class, S pattern, k_min) triples; a k_min replaces the last entry by any k >= k_min"""
        pass

    @abstractmethod
    def _construct(self, h: Graph, s: SSequence, trace: List[str]) -> List[int]:
        """1-based classes for a connected h; checked by the caller"""
        pass

    def supports(self, s: SSequence) -> bool:
        return bool(self.constraints(s))

    def constraints(self, s: SSequence) -> List[ClassConstraint]:
        out = []
        for constraint, pattern, k_min in self.templates():
            if len(pattern) != s.k:
                continue
            if k_min is None and s.values == pattern:
                out.append(constraint)
            elif k_min is not None and s.values[:-1] == pattern[:-1] and s.values[-1] >= k_min:
                out.append(constraint)
        return out

    def check_class(self, g: Graph, s: SSequence) -> None:
        allowed = self.constraints(s)
        if not allowed:
            raise PreconditionViolated(f"{self.name} does not handle S=({s})")
        if g.n == 0:
            return
        profile = classify(g)
        if not any(profile_satisfies(profile, c) for c in allowed):
            raise OutOfClass(" or ".join(c.label() for c in allowed), profile)

    def color(self, g: Graph, s) -> ColorerResult:
        """Color g under s; the coloring always verifies"""
        s = make_sequence(s)
        self.check_class(g, s)
        classes = [0] * g.n
        trace: List[str] = []
        used_fallback = repaired = False
        for component in connected_components(g):
            h, old_to_new = induced_subgraph(g, component)
            local, outcome = self._color_component(h, s, trace)
            used_fallback = used_fallback or outcome == "exact"
            repaired = repaired or outcome == "repair"
            for old, new in old_to_new.items():
                classes[old] = local[new]

        coloring = make_coloring(classes)
        if verify(g, s, coloring):
            raise InternalStructureError(f"{self.name} assembled an invalid coloring")
        logger.debug(f"{self.name} colored n={g.n} under ({s}), fallback={used_fallback}, repaired={repaired}")
        return ColorerResult(
            coloring=coloring,
            sequence=s,
            colorer=self.name,
            trace=trace,
            good_flags=self.good_flags(g, s, classes),
            used_fallback=used_fallback,
            repaired=repaired,
        )

    def color_batch(self, graphs: List[Graph], s) -> List[ColorerResult]:
        return [self.color(g, s) for g in graphs]

    def good_flags(self, g: Graph, s: SSequence, classes: List[int]) -> Dict[str, bool]:
        return {}

    def _color_component(self, h: Graph, s: SSequence, trace: List[str]) -> Tuple[List[int], Optional[str]]:
        """Colors of h and how they were reached: None, 'repair' or 'exact'"""
        try:
            colors = self._construct(h, s, trace)
            bad = conflicts(h, s, colors)
            problem = f"{len(bad)} vertices in conflict" if bad else None
        except CONSTRUCTION_ERRORS as exc:
            if self.strict:
                raise InternalStructureError(str(exc)) from exc
            colors, bad, problem = None, list(range(h.n)), str(exc)

        if problem is None:
            return colors, None
        if self.strict:
            raise InternalStructureError(f"{self.name}: {problem}")

        if colors is not None and len(bad) <= REPAIR_MAX_CONFLICTS:
            repaired = list(colors)
            if extend(h, s, repaired, bad):
                logger.info(f"{self.name} construction repaired on n={h.n} ({problem})")
                trace.append("repair:local")
                return repaired, "repair"

        logger.warning(f"{self.name} construction failed on n={h.n} ({problem}); completing by exact search")
        trace.append("fallback:exact")
        outcome = decide(h, s, self.solve_config)
        if not outcome.colorable:
            raise InternalStructureError(f"{self.name}: exact completion ended {outcome.status}")
        return list(outcome.coloring.assignment), "exact"

    def _solve(self, h: Graph, s: SSequence, trace: List[str], why: str) -> List[int]:
        """Exact coloring of a small piece the construction resolves by inspection"""
        outcome = decide(h, s, self.solve_config)
        if not outcome.colorable:
            raise InternalStructureError(f"{why}: piece of order {h.n} is {outcome.status}")
        trace.append(f"exact:{why}")
        return list(outcome.coloring.assignment)

    def _linear(self, h: Graph, s: SSequence, scheme: LinearScheme,
                class_map: Optional[Dict[int, int]], trace: List[str]) -> List[int]:
        """Paths and cycles by the closed forms; C5 from the catalog or by search"""
        try:
            return list(color_delta2(h, scheme, class_map).assignment)
        except ExceptionalGraph:
            pass
        classes = [0] * h.n
        for component in connected_components(h):
            piece, old_to_new = induced_subgraph(h, component)
            try:
                local = list(color_delta2(piece, scheme, class_map).assignment)
            except ExceptionalGraph:
                found = catalog.exception_coloring(piece, s)
                if found is not None:
                    trace.append(f"exception:{found[0]}")
                    local = list(found[1].assignment)
                else:
                    local = self._solve(piece, s, trace, "C5")
            for old, new in old_to_new.items():
                classes[old] = local[new]
        return classes
