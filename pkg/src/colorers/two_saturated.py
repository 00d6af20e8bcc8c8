"""(1,1,2), (1,2,2,2) and (2,2,2,2,2) colorings of 2-saturated graphs with g3 = 3.

Pipeline per component: strip degree-1 vertices, take care of diamonds and of
cycles whose closed neighbourhood is the whole graph, and otherwise split the
graph into a 2-packing Y plus paths.  The paths get a closed-form coloring and
Y the class the path colorings leave unused.
"""
import logging
from typing import Dict, List, Optional, Tuple

from ..data.schemas import ClassConstraint, SSequence
from ..errors import InternalStructureError
from ..graph.classify import find_diamond
from ..graph.core import Graph, connected_components, enumerate_triangles, induced_subgraph, is_bipartite
from ..structure.decompose import decompose_2sat, dominated_cycles
from .base import BaseColorer, conflicts, extend
from .linear import L11K, L122, L2222, color_cycle, color_path_ends1, color_path_equal_ends

logger = logging.getLogger(__name__)

TWO_SAT = ClassConstraint(saturation_max=2, g3_min=3, g3_max=3)

S112 = (1, 1, 2)
S1222 = (1, 2, 2, 2)
S22222 = (2, 2, 2, 2, 2)


def strip_leaves(h: Graph) -> Tuple[List[int], List[int]]:
    """Repeatedly remove degree-1 vertices; returns (core vertices, leaves in removal order)"""
    degree = h.degrees()
    alive = set(range(h.n))
    leaves: List[int] = []
    queue = [v for v in range(h.n) if degree[v] == 1]
    while queue and len(alive) > 2:
        v = queue.pop()
        if v not in alive or degree[v] != 1:
            continue
        alive.discard(v)
        leaves.append(v)
        for w in h.adjacency[v]:
            if w in alive:
                degree[w] -= 1
                if degree[w] == 1:
                    queue.append(w)
    return sorted(alive), leaves


class TwoSaturatedColorer(BaseColorer):
    """The three 2-saturated theorems share one reduction pipeline"""

    name = "two-saturated"

    def templates(self):
        return [(TWO_SAT, S112, None), (TWO_SAT, S1222, None), (TWO_SAT, S22222, None)]

    def _reserved(self, s: SSequence) -> int:
        """Class left for Y and N(C)"""
        return {S112: 3, S1222: 4, S22222: 5}[s.values]

    def _construct(self, h: Graph, s: SSequence, trace: List[str]) -> List[int]:
        if h.n <= 2:
            return self._solve(h, s, trace, "tiny")

        core, leaves = strip_leaves(h)
        if leaves:
            trace.append(f"leaves:{len(leaves)}")
            sub, _ = induced_subgraph(h, core)
            colors = [0] * h.n
            for old, c in zip(core, self._construct(sub, s, trace)):
                colors[old] = c
            for v in reversed(leaves):
                if not extend(h, s, colors, [v]):
                    raise InternalStructureError(f"no class left for leaf {v}")
            return colors

        if h.max_degree <= 2:
            scheme = {S112: L11K(2), S1222: L122, S22222: L2222}[s.values]
            return self._linear(h, s, scheme, None, trace)

        diamond = find_diamond(h)
        if diamond is not None:
            return self._diamond(h, s, diamond, trace)

        # the first dominating cycle whose scheme checks out
        for cycle in dominated_cycles(h):
            steps = [f"dominated-cycle:{len(cycle)}"]
            try:
                colors = self._dominated(h, s, cycle, steps)
            except InternalStructureError as e:
                logger.debug(f"dominated cycle {cycle} skipped: {e}")
                continue
            if colors is not None and not conflicts(h, s, colors):
                trace.extend(steps)
                return colors

        return self._paths(h, s, trace)

    def _construct_all(self, h: Graph, s: SSequence, trace: List[str]) -> List[int]:
        colors = [0] * h.n
        for component in connected_components(h):
            piece, old_to_new = induced_subgraph(h, component)
            local = self._construct(piece, s, trace)
            for old, new in old_to_new.items():
                colors[old] = local[new]
        return colors

    # -- diamonds ---------------------------------------------------------
    def _diamond(self, h: Graph, s: SSequence, diamond: Tuple[int, int, int, int],
                 trace: List[str]) -> List[int]:
        x1, x2, x3, x4 = diamond
        if h.n == 4:
            return self._solve(h, s, trace, "diamond")
        if h.degree(x4) == 3:
            x2, x4 = x4, x2
        outside = [w for w in h.adjacency[x2] if w not in diamond]
        if len(outside) != 1 or h.degree(x4) != 2:
            raise InternalStructureError(f"diamond {diamond} is attached unexpectedly")
        y = outside[0]
        drop = [x1, x2, x3, x4] if s.values == S22222 else [x1, x2, x3, x4, y]
        if s.values != S22222 and h.degree(y) != 2:
            raise InternalStructureError(f"diamond neighbour {y} is not a 2-vertex")
        trace.append(f"diamond:{list(diamond)}")

        keep = [v for v in range(h.n) if v not in set(drop)]
        rest, old_to_new = induced_subgraph(h, keep)
        colors = [0] * h.n
        for old, c in zip(keep, self._construct_all(rest, s, trace)):
            colors[old] = c

        z = next((w for w in h.adjacency[y] if w != x2), None)
        scheme = self._diamond_scheme(h, s, colors, (x1, x2, x3, x4), y, z)
        if scheme is not None:
            for v, c in scheme.items():
                colors[v] = c
            return colors
        if not extend(h, s, colors, drop):
            raise InternalStructureError(f"diamond {diamond} cannot be colored back")
        return colors

    def _diamond_scheme(self, h: Graph, s: SSequence, colors: List[int], diamond, y: int,
                        z: Optional[int]) -> Optional[Dict[int, int]]:
        x1, x2, x3, x4 = diamond
        zc = colors[z] if z is not None else 0
        if s.values == S112:
            a = 1 if zc != 1 else 2
            b = 3 - a
            return {y: a, x1: a, x2: b, x3: 3, x4: b}
        if s.values == S1222:
            if zc == 1:
                near = {colors[w] for w in h.adjacency[z] if w != y}
                free = [c for c in (2, 3, 4) if c not in near]
                if not free:
                    return None
                a = free[0]
                b, c = [k for k in (2, 3, 4) if k != a]
                return {y: a, x1: b, x2: 1, x3: c, x4: 1}
            a = zc
            b, c = [k for k in (2, 3, 4) if k != a]
            return {y: 1, x1: 1, x2: b, x3: c, x4: a}
        # (2,2,2,2,2): y and z are already colored
        a, b = colors[y], zc
        c, d, e = [k for k in range(1, 6) if k not in (a, b)][:3]
        return {x1: c, x2: d, x3: e, x4: b}

    # -- V = N[C] ---------------------------------------------------------
    def _dominated(self, h: Graph, s: SSequence, cycle: List[int], trace: List[str]) -> Optional[List[int]]:
        on_cycle = set(cycle)
        outside = [v for v in range(h.n) if v not in on_cycle]
        reserved = self._reserved(s)
        if s.values == S112:
            return self._dominated_112(h, s, cycle, outside)
        if len(cycle) == 5:
            return self._solve(h, s, trace, "dominated-C5")
        scheme = L122 if s.values == S1222 else L2222
        colors = [0] * h.n
        for v, c in zip(cycle, color_cycle(len(cycle), scheme).assignment):
            colors[v] = c
        for v in outside:
            colors[v] = reserved
        return colors

    def _dominated_112(self, h: Graph, s: SSequence, cycle: List[int], outside: List[int]) -> Optional[List[int]]:
        dist = h.distances().matrix
        if len(cycle) % 2 == 0:
            colors = [0] * h.n
            for i, v in enumerate(cycle):
                colors[v] = 1 + i % 2
            for v in outside:
                colors[v] = 3
            return colors
        # one cycle 3-vertex joins the 2-class with the outside vertices far from it
        for v2 in cycle:
            if h.degree(v2) != 3:
                continue
            twos = [v2] + [x for x in outside if dist[v2, x] >= 3]
            if any(dist[a, b] < 3 for i, a in enumerate(twos) for b in twos[i + 1:]):
                continue
            rest = [v for v in range(h.n) if v not in set(twos)]
            sub, old_to_new = induced_subgraph(h, rest)
            split = is_bipartite(sub)
            if not split:
                continue
            colors = [0] * h.n
            for v in twos:
                colors[v] = 3
            for old, new in old_to_new.items():
                colors[old] = 1 + split.labels[new]
            return colors
        logger.debug(f"no 2-class choice for the dominated odd cycle {cycle}")
        return None

    # -- Y + paths --------------------------------------------------------
    def _paths(self, h: Graph, s: SSequence, trace: List[str]) -> List[int]:
        decomposition = decompose_2sat(h, check_dominated=False)
        trace.append(f"decompose:|Y|={len(decomposition.y)} paths={len(decomposition.paths)}")
        colors = [0] * h.n
        for v in decomposition.y:
            colors[v] = self._reserved(s)
        in_triangle = {v for t in enumerate_triangles(h) for v in t.vertices}
        for path in decomposition.paths:
            for v, c in zip(path, self._path_classes(s, path, in_triangle)):
                colors[v] = c
        return colors

    def _path_classes(self, s: SSequence, path: List[int], in_triangle) -> List[int]:
        n = len(path)
        if s.values == S112:
            return [1 + i % 2 for i in range(n)]
        if s.values == S1222:
            if n < 3:
                return [1, 2][:n]
            return list(color_path_ends1(n).assignment)
        if n >= 4:
            return list(color_path_equal_ends(n).assignment)
        # order-3 path: the end off every triangle takes 2a
        classes = [1, 2, 3][:n]
        if n == 3 and path[0] in in_triangle and path[-1] not in in_triangle:
            classes.reverse()
        return classes
