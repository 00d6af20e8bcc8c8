"""2-packing + disjoint paths decomposition of 2-saturated subcubic graphs.

Good cycles are peeled off one at a time; their attached 2-vertices and one
attachment vertex per attached 3-vertex go into Y.  Triangles left over
contribute one vertex each (a 2-vertex when the triangle has one, otherwise a
t-vertex chosen over a BFS tree).  Every property the construction promises is
re-checked before returning.
"""
import logging
from itertools import islice
from typing import Dict, Iterator, List, Optional, Set

import networkx as nx

from ..data.schemas import PathDecomposition
from ..errors import InternalStructureError, PreconditionViolated
from ..graph.classify import classify
from ..graph.core import (
    UNREACHABLE,
    CyclePath,
    Graph,
    bfs_depths,
    bfs_tree,
    connected_components,
    delete_vertices,
    enumerate_triangles,
    induced_subgraph,
)
from ..colorers.linear import linear_order

logger = logging.getLogger(__name__)

# chordless cycles can be exponentially many on dense cubic pieces; past this
# many the dominated-cycle search gives up
CYCLE_SCAN_LIMIT = 20_000


def find_good_cycle(g: Graph) -> Optional[CyclePath]:
    """A chordless cycle of order >= 4, or None when every cycle is a triangle"""
    for cycle in nx.chordless_cycles(g.to_networkx()):
        if len(cycle) >= 4:
            return CyclePath(tuple(int(v) for v in cycle), "cycle")
    return None


def dominated_cycles(g: Graph, limit: int = CYCLE_SCAN_LIMIT) -> Iterator[List[int]]:
    """Chordless cycles C with V(g) = N[C], each in cycle order.

    In a diamond-free 2-saturated graph every chord skips a single vertex, so
    shortcutting the chords of a dominating cycle leaves a chordless one that
    still dominates.
    """
    if g.n < 3:
        return
    # each cycle vertex has at most one neighbour off the cycle
    shortest = (g.n + 1) // 2
    for cycle in islice(nx.chordless_cycles(g.to_networkx()), limit):
        if len(cycle) < shortest:
            continue
        closed = set(cycle)
        for v in cycle:
            closed.update(g.adjacency[v])
        if len(closed) == g.n:
            yield [int(v) for v in cycle]


def find_dominated_cycle(g: Graph, limit: int = CYCLE_SCAN_LIMIT) -> Optional[List[int]]:
    """A chordless cycle C with V(g) = N[C], in cycle order, or None"""
    return next(dominated_cycles(g, limit), None)


def _check_preconditions(g: Graph, check_dominated: bool) -> None:
    if len(connected_components(g)) != 1:
        raise PreconditionViolated("graph must be connected")
    profile = classify(g)
    if profile.saturation > 2:
        raise PreconditionViolated(f"graph is {profile.saturation}-saturated, need <= 2")
    if not profile.had_three_vertex or profile.g3 != 3:
        raise PreconditionViolated("g3 must be 3")
    if profile.min_degree != 2 or profile.max_degree != 3:
        raise PreconditionViolated("need min degree 2 and max degree 3")
    if profile.diamond is not None:
        raise PreconditionViolated(f"diamond at {profile.diamond}")
    if check_dominated and find_dominated_cycle(g) is not None:
        raise PreconditionViolated("some cycle dominates the graph")


def _attachments(g: Graph, cycle: List[int]) -> List[int]:
    """A_i and B_i of one good cycle, as g vertices"""
    position = {v: i for i, v in enumerate(cycle)}
    length = len(cycle)
    picked = []
    attached = sorted({w for v in cycle for w in g.adjacency[v] if w not in position})
    for x in attached:
        on_cycle = sorted(position[w] for w in g.adjacency[x] if w in position)
        if len(on_cycle) != 2:
            raise InternalStructureError(f"vertex {x} meets the good cycle {len(on_cycle)} times")
        p, q = on_cycle
        if (p + 1) % length == q:
            first = p
        elif (q + 1) % length == p:
            first = q
        else:
            raise InternalStructureError(f"neighbours of {x} on the good cycle are not consecutive")
        if g.degree(x) == 2:
            picked.append(x)
        else:
            # the earlier neighbour in cycle order
            picked.append(cycle[first])
    return picked


def _far_from(dist, y: Set[int], v: int, radius: int = 2) -> bool:
    return all(dist[v, w] > radius for w in y)


def decompose_2sat(g: Graph, check_dominated: bool = True) -> PathDecomposition:
    """Split g into a 2-packing Y and the paths of G - Y"""
    _check_preconditions(g, check_dominated)
    dist = g.distances().matrix
    trace: List[str] = []
    y: Set[int] = set()

    alive = list(range(g.n))
    while True:
        h, old_to_new = induced_subgraph(g, alive)
        new_to_old = {new: old for old, new in old_to_new.items()}
        cycle = find_good_cycle(h)
        if cycle is None:
            break
        members = [new_to_old[v] for v in cycle.vertices]
        picked = _attachments(g, members)
        y.update(picked)
        trace.append(f"good-cycle:{len(members)} picked={len(picked)}")
        removed = set(members)
        alive = [v for v in alive if v not in removed]

    gp, old_to_new = induced_subgraph(g, alive)
    new_to_old = {new: old for old, new in old_to_new.items()}
    triangles = [[new_to_old[v] for v in t.vertices] for t in enumerate_triangles(gp)]

    # D1: one 2-vertex per triangle that has one
    dropped: Set[int] = set()
    for triangle in triangles:
        twos = [v for v in triangle if g.degree(v) == 2]
        if not twos:
            continue
        choice = next((v for v in twos if _far_from(dist, y, v)), None)
        if choice is None:
            raise InternalStructureError(f"no 2-vertex of triangle {triangle} keeps Y a 2-packing")
        y.add(choice)
        dropped.update(triangle)
        trace.append(f"D1:{choice}")

    # D2: one t-vertex per all-3-vertex triangle, BFS order from a t-vertex
    remaining = [t for t in triangles if not dropped.intersection(t)]
    if remaining:
        t_vertices = sorted({v for t in remaining for v in t})
        triangle_of: Dict[int, int] = {}
        for index, t in enumerate(remaining):
            for v in t:
                triangle_of[v] = index
        done: Set[int] = set()
        for root in t_vertices:
            if triangle_of[root] in done:
                continue
            parent = bfs_tree(g, root)
            depth_order = _bfs_order(g, root)
            for v in depth_order:
                if v not in triangle_of or triangle_of[v] in done:
                    continue
                index = triangle_of[v]
                choice = _pick_t_vertex(g, dist, y, remaining[index], parent)
                y.add(choice)
                done.add(index)
                trace.append(f"D2:{choice}")

    decomposition = _paths(g, y, trace)
    _check(g, decomposition)
    logger.debug(f"decompose_2sat n={g.n}: |Y|={len(y)}, {len(decomposition.paths)} paths")
    return decomposition


def _bfs_order(g: Graph, root: int) -> List[int]:
    depth = bfs_depths(g, root)
    reached = [v for v in range(g.n) if depth[v] != UNREACHABLE]
    return sorted(reached, key=lambda v: (depth[v], v))


def _pick_t_vertex(g: Graph, dist, y: Set[int], triangle: List[int], parent) -> int:
    """Good t-vertices first (BFS father of degree 2), each at distance > 2 from Y"""
    def good(v: int) -> bool:
        father = parent[v]
        return father is not None and father >= 0 and g.degree(father) == 2

    ranked = sorted(triangle, key=lambda v: (not good(v), v))
    for v in ranked:
        if _far_from(dist, y, v):
            return v
    raise InternalStructureError(f"no vertex of triangle {triangle} keeps Y a 2-packing")


def _paths(g: Graph, y: Set[int], trace: List[str]) -> PathDecomposition:
    rest, old_to_new = delete_vertices(g, y)
    new_to_old = {new: old for old, new in old_to_new.items()}
    if rest.max_degree > 2:
        raise InternalStructureError("G - Y has a vertex of degree 3")
    paths = []
    for component in connected_components(rest):
        order, is_cycle = linear_order(rest, component)
        if is_cycle:
            raise InternalStructureError(f"G - Y keeps a cycle of order {len(order)}")
        paths.append([new_to_old[v] for v in order])
    return PathDecomposition(y=sorted(y), paths=paths, trace=trace)


def triangle_two_vertices(g: Graph) -> Set[int]:
    return {v for t in enumerate_triangles(g) for v in t.vertices if g.degree(v) == 2}


def _check(g: Graph, decomposition: PathDecomposition) -> None:
    dist = g.distances().matrix
    y = decomposition.y
    for i, a in enumerate(y):
        for b in y[i + 1:]:
            if dist[a, b] <= 2:
                raise InternalStructureError(f"Y is not a 2-packing: dist({a},{b}) = {dist[a, b]}")

    special = triangle_two_vertices(g)
    for path in decomposition.paths:
        floor = 3 if special.intersection(path) else 4
        if len(path) < floor:
            raise InternalStructureError(f"path {path} has order {len(path)} < {floor}")

    for i, p in enumerate(decomposition.paths):
        for q in decomposition.paths[i + 1:]:
            for a in p[1:-1]:
                for b in q[1:-1]:
                    if dist[a, b] < 3:
                        raise InternalStructureError(f"interior vertices {a}, {b} at distance {dist[a, b]}")
            for a in {p[0], p[-1]}:
                for b in {q[0], q[-1]}:
                    if dist[a, b] < 3:
                        raise InternalStructureError(f"path ends {a}, {b} at distance {dist[a, b]}")
