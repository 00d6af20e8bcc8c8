"""Colorers for 0- and 1-saturated subcubic graphs.

Both work by peeling 2-vertices that sit on a shortest cycle through a
3-vertex.  Such a vertex has its two neighbours at distance <= 2 through the
rest of the cycle, so every remaining distance survives the deletion and a
coloring of the smaller graph stays valid when the vertex comes back.
"""
import logging
from typing import Dict, List, Optional, Tuple

from ..data import catalog
from ..data.schemas import ClassConstraint, SSequence
from ..errors import ExcludedGraph, InternalStructureError
from ..graph.core import (
    Graph,
    connected_components,
    enumerate_triangles,
    induced_subgraph,
    shortest_cycle_path_through,
    shortest_cycle_through,
)
from .base import BaseColorer, first_free
from .linear import L11K, L122, L1245K, L2222, linear_order

logger = logging.getLogger(__name__)

ZERO_SAT = ClassConstraint(saturation_max=0, g3_max=4)
ONE_SAT = ClassConstraint(saturation_max=1, g3_min=3, g3_max=3)
ONE_SAT_G4 = ClassConstraint(saturation_max=1, g3_max=4)

# catalog graphs small enough to be met as a reduced graph
EXCEPTION_ORDER = 6


def _alive_view(h: Graph, alive: List[int]) -> Tuple[Graph, Dict[int, int]]:
    sub, old_to_new = induced_subgraph(h, alive)
    return sub, {new: old for old, new in old_to_new.items()}


class LowSaturationColorer(BaseColorer):
    """(1,1,3,k), (1,2,2,3), (2,2,2,2,3) and (1,2,3,4,5,k) on the low-saturation classes"""

    name = "low-saturation"

    def templates(self):
        out = []
        for constraint in (ZERO_SAT, ONE_SAT):
            out.extend([
                (constraint, (1, 1, 3, 3), 3),
                (constraint, (1, 2, 2, 3), None),
                (constraint, (2, 2, 2, 2, 3), None),
                (constraint, (1, 2, 3, 4, 5, 6), 6),
            ])
        return out

    def _base(self, s: SSequence):
        """Scheme and class map for the peeled-down graph; value-3 classes stay free"""
        values = s.values
        if values[:3] == (1, 1, 3):
            return L11K(values[3]), {1: 1, 2: 2, 3: 4}
        if values == (1, 2, 2, 3):
            return L122, None
        if values == (2, 2, 2, 2, 3):
            return L2222, None
        return L1245K(values[5]), {1: 1, 2: 2, 3: 4, 4: 5, 5: 6}

    def _construct(self, h: Graph, s: SSequence, trace: List[str]) -> List[int]:
        if s.values == (2, 2, 2, 2, 3) and h.n == EXCEPTION_ORDER:
            found = catalog.find_isomorphic(h, ["G1"])
            if found is not None:
                raise ExcludedGraph("G1", s.values)

        alive = list(range(h.n))
        peeled: List[int] = []
        base: Optional[List[int]] = None
        while True:
            sub, new_to_old = _alive_view(h, alive)
            if sub.n <= EXCEPTION_ORDER:
                found = catalog.exception_coloring(sub, s)
                if found is not None:
                    name, coloring = found
                    trace.append(f"exception:{name}")
                    base = [0] * h.n
                    for new, c in enumerate(coloring.assignment):
                        base[new_to_old[new]] = c
                    break
                if peeled and s.values == (2, 2, 2, 2, 3) and catalog.find_isomorphic(sub, ["G1"]):
                    raise InternalStructureError("reduction reached G1")
            if sub.max_degree <= 2:
                break
            x = next(v for v in range(sub.n) if sub.degree(v) == 3)
            cycle = shortest_cycle_path_through(sub, x)
            if cycle is None or len(cycle) > 4:
                raise InternalStructureError(f"3-vertex {new_to_old[x]} lies on no cycle of order <= 4")
            # 2-vertices of h before 3-vertices that lost a neighbour to an earlier peel
            ends = sorted((v for v in (cycle[1], cycle[-1]) if sub.degree(v) == 2),
                          key=lambda v: (h.degree(new_to_old[v]) != 2, v))
            if not ends:
                raise InternalStructureError(f"no 2-vertex next to {new_to_old[x]} on its shortest cycle")
            victim = new_to_old[ends[0]]
            peeled.append(victim)
            alive.remove(victim)
            trace.append(f"peel:{victim}")

        colors = [0] * h.n
        if base is not None:
            colors = base
        else:
            scheme, class_map = self._base(s)
            sub, new_to_old = _alive_view(h, alive)
            for new, c in enumerate(self._linear(sub, s, scheme, class_map, trace)):
                colors[new_to_old[new]] = c
            if s.values == (1, 1, 3, 3):
                self._move_cycle_extras(h, s, colors, alive, trace)

        threes = s.classes_with_value(3)
        for v in reversed(peeled):
            c = first_free(h, s, colors, v, threes)
            if c is None:
                c = first_free(h, s, colors, v)
                if c is None:
                    raise InternalStructureError(f"no free class for peeled vertex {v}")
                trace.append(f"relaxed:{v}")
            colors[v] = c
        return colors

    def _move_cycle_extras(self, h: Graph, s: SSequence, colors: List[int], alive: List[int],
                           trace: List[str]) -> None:
        """Rotate each odd remainder cycle so its value-3 vertex is a 2-vertex of h next to a 3-vertex"""
        sub, new_to_old = _alive_view(h, alive)
        for component in connected_components(sub):
            order, is_cycle = linear_order(sub, component)
            if not is_cycle or len(order) % 2 == 0:
                continue
            cycle = [new_to_old[v] for v in order]
            for v in cycle:
                colors[v] = 0
            ranked = sorted(range(len(cycle)), key=lambda i: (not _extra_holder(h, cycle[i]), i))
            for i in ranked:
                c = first_free(h, s, colors, cycle[i], [4, 3])
                if c is None:
                    continue
                for j, v in enumerate(cycle[i + 1:] + cycle[:i]):
                    colors[v] = 1 + j % 2
                colors[cycle[i]] = c
                trace.append(f"odd-cycle-extra:{cycle[i]}")
                break
            else:
                raise InternalStructureError(f"no vertex of the odd cycle {cycle} takes a value-3 class")

    def good_flags(self, g: Graph, s: SSequence, classes: List[int]) -> Dict[str, bool]:
        """Value-3 classes only on 2-vertices next to a 3-vertex lying on a cycle of order <= g3"""
        if s.values[:3] == (1, 1, 3) and s.values[3] == 3:
            restricted = [3, 4]
        else:
            restricted = s.classes_with_value(3)[:1]
        g3 = max((shortest_cycle_through(g, v) for v in range(g.n) if g.degree(v) == 3), default=0)
        good = all(
            g.degree(v) == 2 and any(
                g.degree(w) == 3 and shortest_cycle_through(g, w) <= g3 for w in g.adjacency[v]
            )
            for v, c in enumerate(classes) if c in restricted
        )
        return {"value3_good": good}


def _extra_holder(h: Graph, v: int) -> bool:
    return h.degree(v) == 2 and any(h.degree(w) == 3 for w in h.adjacency[v])


class OneSaturatedColorer(BaseColorer):
    """(1,2,2,2) on 1-saturated graphs with g3 <= 4; class 4 is the reserved 2c"""

    name = "one-saturated-g4"

    def templates(self):
        return [(ONE_SAT_G4, (1, 2, 2, 2), None)]

    def _construct(self, h: Graph, s: SSequence, trace: List[str]) -> List[int]:
        alive = list(range(h.n))
        steps: List[Tuple[str, Tuple[int, ...]]] = []
        while True:
            sub, new_to_old = _alive_view(h, alive)
            if sub.max_degree <= 2:
                break
            step = self._pick(sub, [h.degree(new_to_old[v]) for v in range(sub.n)])
            removed = tuple(new_to_old[v] for v in step[1])
            steps.append((step[0], removed))
            for v in removed:
                alive.remove(v)
            trace.append(f"peel:{step[0]}:{list(removed)}")

        colors = [0] * h.n
        sub, new_to_old = _alive_view(h, alive)
        for new, c in enumerate(self._linear(sub, s, L122, None, trace)):
            colors[new_to_old[new]] = c

        for kind, removed in reversed(steps):
            if kind == "single":
                self._place(h, s, colors, removed[0], [4], trace)
            else:
                self._place_pair(h, s, colors, removed, trace)
        return colors

    def _pick(self, sub: Graph, full_degree: List[int]) -> Tuple[str, Tuple[int, ...]]:
        """The reduction for one 3-vertex: a triangle 2-vertex, one 4-cycle 2-vertex or a 2-vertex pair.

        ``full_degree`` holds the degrees in the unpeeled graph; its 2-vertices go first.
        """
        def rank(v: int):
            return (full_degree[v] != 2, v)

        for triangle in enumerate_triangles(sub):
            if any(sub.degree(v) == 3 for v in triangle.vertices):
                twos = sorted((v for v in triangle.vertices if sub.degree(v) == 2), key=rank)
                if twos:
                    return "single", (twos[0],)
        for x in range(sub.n):
            if sub.degree(x) != 3:
                continue
            cycle = shortest_cycle_path_through(sub, x)
            if cycle is None or len(cycle) != 4:
                continue
            _, a, c, b = cycle
            if sub.degree(a) == 2 and sub.degree(b) == 2:
                return "single", (min(a, b, key=rank),)
            y2 = a if sub.degree(a) == 2 else b
            if sub.degree(y2) == 2 and sub.degree(c) == 2:
                return "pair", (y2, c)
        raise InternalStructureError("no 3-vertex lies on a cycle of order <= 4")

    def _place(self, h: Graph, s: SSequence, colors: List[int], v: int, preferred: List[int],
               trace: List[str]) -> None:
        # 2c stays on 2-vertices of h
        allowed = [c for c in range(1, s.k + 1) if c != 4 or h.degree(v) == 2]
        c = first_free(h, s, colors, v, [c for c in preferred if c in allowed])
        if c is None:
            c = first_free(h, s, colors, v, allowed)
            if c is None:
                raise InternalStructureError(f"no free class for peeled vertex {v}")
            trace.append(f"relaxed:{v}")
        colors[v] = c

    def _place_pair(self, h: Graph, s: SSequence, colors: List[int], pair: Tuple[int, ...],
                    trace: List[str]) -> None:
        """y2 by 1 and y3 by 2c, or the other way round"""
        y2, y3 = pair
        for first, second in sorted(((y2, y3), (y3, y2)), key=lambda p: h.degree(p[1]) != 2):
            if h.degree(second) != 2:
                continue
            if first_free(h, s, colors, first, [1]) is None:
                continue
            colors[first] = 1
            if first_free(h, s, colors, second, [4]) is not None:
                colors[second] = 4
                return
            colors[first] = 0
        self._place(h, s, colors, y2, [1, 4], trace)
        self._place(h, s, colors, y3, [1, 4], trace)

    def good_flags(self, g: Graph, s: SSequence, classes: List[int]) -> Dict[str, bool]:
        """2c only on 2-vertices lying on a cycle of order <= 4"""
        good = all(
            g.degree(v) == 2 and shortest_cycle_through(g, v) <= 4
            for v, c in enumerate(classes) if c == 4
        )
        return {"two_c_good": good}
