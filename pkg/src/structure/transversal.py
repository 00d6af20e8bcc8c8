"""Triangle transversals, their distance-3 power graph and its 3-coloring.

Used by the (1,1,3,3,3) colorer: the transversal T takes one vertex from every
triangle, G^3[T] joins transversal vertices at distance <= 3, and a proper
3-coloring of G^3[T] spreads T over the three value-3 classes.
"""
import logging
from itertools import product
from typing import Dict, List, Sequence, Set, Tuple

from ..data.schemas import TriangleTransversal
from ..errors import (
    InternalStructureError,
    K4Component,
    K4Detected,
    NoTwoVertexOnOddCycle,
    PreconditionViolated,
)
from ..graph.classify import classify
from ..graph.core import (
    Graph,
    bfs_depths,
    connected_components,
    delete_vertices,
    enumerate_triangles,
    induced_power_subgraph,
    induced_subgraph,
)
from ..colorers.linear import linear_order

logger = logging.getLogger(__name__)


def _check_preconditions(g: Graph) -> None:
    if len(connected_components(g)) != 1:
        raise PreconditionViolated("graph must be connected")
    profile = classify(g)
    if profile.three_k > 2:
        raise PreconditionViolated(f"graph is (3,{profile.three_k})-saturated, need (3,2)")
    if not profile.had_three_vertex or profile.g3 != 3:
        raise PreconditionViolated("g3 must be 3")
    if profile.min_degree < 2:
        raise PreconditionViolated("min degree must be 2")
    for u, v in g.edges():
        if g.degree(u) == 2 and g.degree(v) == 2:
            raise PreconditionViolated(f"adjacent 2-vertices {u}, {v}")


def triangle_clusters(g: Graph) -> List[List[Tuple[int, ...]]]:
    """Triangles grouped by shared vertices"""
    triangles = [t.vertices for t in enumerate_triangles(g)]
    parent = list(range(len(triangles)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: Dict[int, int] = {}
    for index, t in enumerate(triangles):
        for v in t:
            if v in owner:
                parent[find(index)] = find(owner[v])
            else:
                owner[v] = index
    groups: Dict[int, List[Tuple[int, ...]]] = {}
    for index, t in enumerate(triangles):
        groups.setdefault(find(index), []).append(t)
    return [groups[key] for key in sorted(groups)]


def _best_cover(g: Graph, cluster: List[Tuple[int, ...]], heavy: Set[int]) -> List[int]:
    """Exact-once cover of the cluster: fewest vertices, then most 2-vertices, then most non-heavy"""
    best = None
    for choice in product(*cluster):
        chosen = set(choice)
        if any(len(chosen.intersection(t)) != 1 for t in cluster):
            continue
        twos = sum(1 for v in chosen if g.degree(v) == 2)
        light = sum(1 for v in chosen if g.degree(v) == 3 and v not in heavy)
        key = (len(chosen), -twos, -light, sorted(chosen))
        if best is None or key < best:
            best = key
    if best is None:
        raise InternalStructureError(f"no vertex set meets each of the triangles {cluster} once")
    return best[3]


def choose_transversal(g: Graph) -> List[int]:
    heavy = set(classify(g).heavy)
    t: List[int] = []
    for cluster in triangle_clusters(g):
        t.extend(_best_cover(g, cluster, heavy))
    return sorted(t)


def triangle_transversal(g: Graph) -> TriangleTransversal:
    """Optimal transversal, its G^3[T] 3-coloring and the odd-cycle representatives"""
    _check_preconditions(g)
    return transversal_from(g, choose_transversal(g))


def transversal_from(g: Graph, t: Sequence[int]) -> TriangleTransversal:
    """Complete a given transversal; raises K4Detected when G^3[T] is K4"""
    members = sorted(t)
    power = induced_power_subgraph(g, members, 3)
    if power.n == 4 and power.m == 6:
        raise K4Detected(members)
    colors = brooks_3color(power)
    x_reps = odd_cycle_reps(g, [v for v in range(g.n) if v not in set(members)])
    edges = [(members[a], members[b]) for a, b in power.edges()]
    logger.debug(f"transversal |T|={len(members)}, G3[T] has {power.m} edges, {len(x_reps)} reps")
    return TriangleTransversal(
        t=members,
        g3t_edges=edges,
        coloring3={members[i]: c for i, c in enumerate(colors)},
        x_reps=x_reps,
    )


def _is_k4(h: Graph, component: List[int]) -> bool:
    return len(component) == 4 and all(h.degree(v) == 3 for v in component)


def _greedy(h: Graph, order: Sequence[int], colors: List[int]) -> bool:
    for v in order:
        taken = {colors[w] for w in h.adjacency[v] if colors[w] >= 0}
        free = [c for c in range(3) if c not in taken]
        if not free:
            return False
        colors[v] = free[0]
    return True


def _reverse_bfs(h: Graph, root: int, allowed: Set[int]) -> List[int]:
    """Vertices of ``allowed`` reachable from root, farthest first, root last"""
    sub, old_to_new = induced_subgraph(h, allowed)
    new_to_old = {new: old for old, new in old_to_new.items()}
    depth = bfs_depths(sub, old_to_new[root])
    reached = [new for new in range(sub.n) if depth[new] >= 0]
    reached.sort(key=lambda new: (-depth[new], new))
    return [new_to_old[new] for new in reached]


def _brooks_component(h: Graph, component: List[int], colors: List[int]) -> bool:
    members = set(component)
    low = next((v for v in component if h.degree(v) < 3), None)
    if low is not None:
        return _greedy(h, _reverse_bfs(h, low, members), colors)

    # 3-regular: two non-adjacent neighbours a, b of v share a color and v is colored last
    for v in component:
        for a in h.adjacency[v]:
            for b in h.adjacency[v]:
                if b <= a or h.has_edge(a, b):
                    continue
                rest = members - {a, b}
                sub, _ = induced_subgraph(h, rest)
                if len(connected_components(sub)) != 1:
                    continue
                colors[a] = colors[b] = 0
                if _greedy(h, _reverse_bfs(h, v, rest), colors):
                    return True
                for w in component:
                    colors[w] = -1
    return False


def _backtrack(h: Graph, vertices: List[int], colors: List[int]) -> bool:
    order = sorted(vertices, key=lambda v: -h.degree(v))

    def step(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[w] for w in h.adjacency[v] if colors[w] >= 0}
        for c in range(3):
            if c in taken:
                continue
            colors[v] = c
            if step(i + 1):
                return True
        colors[v] = -1
        return False

    return step(0)


def brooks_3color(h: Graph) -> List[int]:
    """Proper coloring of h with classes 0, 1, 2.

    Degree-<=2 vertices next to a vertex of degree >= 4 are set aside, the
    rest is colored component by component as in Brooks' theorem, and the
    set-aside vertices are colored last (each sees at most two colors).
    """
    for component in connected_components(h):
        if _is_k4(h, component):
            raise K4Component(component)

    aside = {v for v in range(h.n) if h.degree(v) <= 2 and any(h.degree(w) >= 4 for w in h.adjacency[v])}
    core, old_to_new = delete_vertices(h, aside)
    new_to_old = {new: old for old, new in old_to_new.items()}

    colors = [-1] * h.n
    core_colors = [-1] * core.n
    for component in connected_components(core):
        if core.max_degree <= 3 and _brooks_component(core, component, core_colors):
            continue
        for v in component:
            core_colors[v] = -1
        if not _backtrack(core, component, core_colors):
            raise InternalStructureError(f"G^3[T] component of order {len(component)} is not 3-colorable")
    for new, c in enumerate(core_colors):
        colors[new_to_old[new]] = c

    if not _greedy(h, sorted(aside), colors):
        colors = [-1] * h.n
        if not _backtrack(h, list(range(h.n)), colors):
            raise InternalStructureError("G^3[T] is not 3-colorable")

    for u, v in h.edges():
        if colors[u] == colors[v]:
            raise InternalStructureError(f"3-coloring of G^3[T] clashes on {u}, {v}")
    return colors


def odd_cycle_reps(g: Graph, r_vertices: Sequence[int]) -> List[int]:
    """One g-degree-2 vertex per odd cycle of g[r_vertices], pairwise at distance >= 4"""
    r, old_to_new = induced_subgraph(g, r_vertices)
    if r.max_degree > 2:
        raise PreconditionViolated("remainder must have max degree <= 2")
    new_to_old = {new: old for old, new in old_to_new.items()}

    options: List[List[int]] = []
    for component in connected_components(r):
        order, is_cycle = linear_order(r, component)
        if not is_cycle or len(order) % 2 == 0:
            continue
        cycle = [new_to_old[v] for v in order]
        twos = [v for v in cycle if g.degree(v) == 2]
        if not twos:
            raise NoTwoVertexOnOddCycle(cycle)
        options.append(twos)

    dist = g.distances().matrix
    chosen: List[int] = []

    def place(i: int) -> bool:
        if i == len(options):
            return True
        for v in options[i]:
            # -1 marks another component
            if all(dist[v, w] >= 4 or dist[v, w] < 0 for w in chosen):
                chosen.append(v)
                if place(i + 1):
                    return True
                chosen.pop()
        return False

    if not place(0):
        raise InternalStructureError("odd-cycle representatives cannot be kept at distance >= 4")
    return sorted(chosen)
