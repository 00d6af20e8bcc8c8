"""Colorers for (3,i)-saturated graphs with g3 = 3."""
import logging
from itertools import islice, product
from typing import List, Tuple

from ..data.schemas import ClassConstraint, SSequence, TriangleTransversal
from ..errors import InternalStructureError, K4Component, K4Detected, NoTwoVertexOnOddCycle
from ..graph.classify import classify
from ..graph.core import Graph, build_graph, delete_vertices, induced_subgraph, is_bipartite
from ..structure.packing_pair import packing_pair_search
from ..structure.transversal import transversal_from, triangle_clusters, triangle_transversal
from .base import BaseColorer, blocked, extend, first_free
from .two_saturated import S1222, S22222, TwoSaturatedColorer, strip_leaves

logger = logging.getLogger(__name__)

THREE_ZERO = ClassConstraint(three_k_max=0, g3_min=3, g3_max=3)
THREE_ONE = ClassConstraint(three_k_max=1, g3_min=3, g3_max=3)
THREE_TWO = ClassConstraint(three_k_max=2, g3_min=3, g3_max=3)

# alternative transversals tried when G^3[T] is K4
K4_ATTEMPTS = 256


class ThreeZeroColorer(BaseColorer):
    """(1,2,2,2,2) and (2,2,2,2,2,2) through the 2-saturated colorers"""

    name = "three-zero"

    def __init__(self, config=None):
        super().__init__(config)
        self.inner = TwoSaturatedColorer(config)

    def templates(self):
        return [(THREE_ZERO, (1, 2, 2, 2, 2), None), (THREE_ZERO, (2, 2, 2, 2, 2, 2), None)]

    def _construct(self, h: Graph, s: SSequence, trace: List[str]) -> List[int]:
        if s.values == (1, 2, 2, 2, 2):
            inner_s, lift, spare = SSequence(values=S1222), [1, 3, 4, 5], 2
        else:
            inner_s, lift, spare = SSequence(values=S22222), [2, 3, 4, 5, 6], 1

        ys = heavy_companions(h)
        dist = h.distances().matrix
        for i, a in enumerate(ys):
            for b in ys[i + 1:]:
                if dist[a, b] < 3:
                    raise InternalStructureError(f"removed vertices {a}, {b} at distance {dist[a, b]}")
        trace.append(f"heavy-companions:{ys}")

        rest, old_to_new = delete_vertices(h, ys)
        colors = [0] * h.n
        inner = self.inner._construct_all(rest, inner_s, trace)
        for old, new in old_to_new.items():
            colors[old] = lift[inner[new] - 1]
        for v in ys:
            colors[v] = spare
        return colors


def heavy_companions(h: Graph) -> List[int]:
    """For each heavy x, the 2-vertex on the triangle of x's off-triangle neighbour"""
    profile = classify(h)
    ys = set()
    for x in profile.heavy:
        nbrs = h.adjacency[x]
        x3 = next((w for w in nbrs if not any(h.has_edge(w, u) for u in nbrs if u != w)), None)
        if x3 is None:
            raise InternalStructureError(f"heavy vertex {x} has no neighbour off its triangle")
        y = next((w for w in h.adjacency[x3] if w != x and h.degree(w) == 2), None)
        if y is None:
            raise InternalStructureError(f"neighbour {x3} of heavy vertex {x} has no 2-vertex neighbour")
        ys.add(y)
    return sorted(ys)


class ThreeOneColorer(BaseColorer):
    """(1,1,2,4) for i = 0 and (1,1,2,3) for i = 1 from an extended packing pair"""

    name = "three-i"

    def templates(self):
        return [(THREE_ZERO, (1, 1, 2, 4), None), (THREE_ONE, (1, 1, 2, 3), None)]

    def _construct(self, h: Graph, s: SSequence, trace: List[str]) -> List[int]:
        i = 0 if s.values[3] == 4 else 1
        extension = packing_pair_search(h, i)
        if extension.dominated_cycle is not None:
            return self._solve(h, s, trace, "dominated-odd-cycle")
        trace.append(f"packing-pair:|X|={len(extension.pair.x)} |Y|={len(extension.pair.y)} "
                     f"|XT|={len(extension.xt)} |YT|={len(extension.yt)}")

        colors = [0] * h.n
        for v in extension.yt:
            colors[v] = 4
        for v in extension.xt:
            colors[v] = 3
        rest, old_to_new = delete_vertices(h, set(extension.xt) | set(extension.yt))
        split = is_bipartite(rest)
        if not split:
            raise InternalStructureError("remainder of the extended pair is not bipartite")
        for old, new in old_to_new.items():
            colors[old] = 1 + split.labels[new]
        return colors

    def good_flags(self, g: Graph, s: SSequence, classes: List[int]) -> dict:
        """Value-1 classes form a proper 2-coloring of what the pair leaves"""
        return {"value1_proper": all(
            not (classes[u] in (1, 2) and classes[u] == classes[v]) for u, v in g.edges()
        )}


def contract(h: Graph, u: int) -> Tuple[Graph, dict]:
    """Delete 2-vertex u and join its two neighbours; returns the graph and old -> new ids"""
    a, b = h.adjacency[u]
    rest, old_to_new = delete_vertices(h, [u])
    edges = rest.edges()
    if not h.has_edge(a, b):
        edges.append((old_to_new[a], old_to_new[b]))
    return build_graph(rest.n, edges), old_to_new


class ThreeTwoColorer(BaseColorer):
    """(1,1,3,3,3): transversal on the value-3 classes, the rest 2-colored"""

    name = "three-two"

    def templates(self):
        return [(THREE_TWO, (1, 1, 3, 3, 3), None)]

    def _construct(self, h: Graph, s: SSequence, trace: List[str]) -> List[int]:
        if h.n <= 3:
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

        pair = next(((u, v) for u, v in h.edges() if h.degree(u) == 2 and h.degree(v) == 2), None)
        if pair is not None:
            u = pair[0]
            trace.append(f"contract:{u}")
            smaller, old_to_new = contract(h, u)
            colors = [0] * h.n
            inner = self._construct(smaller, s, trace)
            for old, new in old_to_new.items():
                colors[old] = inner[new]
            if not extend(h, s, colors, [u]):
                raise InternalStructureError(f"no class left for contracted vertex {u}")
            return colors

        try:
            transversal = triangle_transversal(h)
        except K4Detected as exc:
            trace.append(f"k4:{list(exc.transversal)}")
            return self._k4_case(h, s, trace)
        return self._assemble(h, s, transversal)

    def _assemble(self, h: Graph, s: SSequence, transversal: TriangleTransversal) -> List[int]:
        colors = [0] * h.n
        for t, c in transversal.coloring3.items():
            colors[t] = 3 + c
        reps = transversal.x_reps
        for v in reps:
            c = first_free(h, s, colors, v, [3, 4, 5])
            if c is None:
                raise InternalStructureError(f"odd-cycle representative {v} sees all three value-3 classes")
            colors[v] = c
        rest, old_to_new = delete_vertices(h, set(transversal.t) | set(reps))
        split = is_bipartite(rest)
        if not split:
            raise InternalStructureError("R - X is not bipartite")
        for old, new in old_to_new.items():
            colors[old] = 1 + split.labels[new]
        return colors

    def _k4_case(self, h: Graph, s: SSequence, trace: List[str]) -> List[int]:
        """Other one-per-triangle choices until one assembles into a valid coloring"""
        clusters = triangle_clusters(h)
        choices = []
        for cluster in clusters:
            covers = []
            for choice in product(*cluster):
                chosen = frozenset(choice)
                if all(len(chosen.intersection(t)) == 1 for t in cluster) and chosen not in covers:
                    covers.append(chosen)
            choices.append(covers)
        for picked in islice(product(*choices), K4_ATTEMPTS):
            t = sorted(set().union(*picked))
            try:
                colors = self._assemble(h, s, transversal_from(h, t))
            except (K4Detected, K4Component, NoTwoVertexOnOddCycle, InternalStructureError):
                continue
            if not any(blocked(h, s, colors, v, colors[v]) for v in range(h.n)):
                trace.append(f"k4-transversal:{t}")
                return colors
        raise InternalStructureError("no transversal avoids the K4 configuration")

