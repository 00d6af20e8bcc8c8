"""Packing pairs (X, Y) and their odd-cycle extensions for (3,i)-saturated graphs.

X is a 2-packing, Y a 4-packing (i = 0) or 3-packing (i = 1); every member sits
on a triangle and no triangle holds two members.  The pair is grown greedily,
then improved by exchange moves until neither theta (total weight) can rise nor
gamma (uncovered triangles) fall.  The extension phase then breaks the odd
cycles left in G - (X u Y) one vertex at a time.
"""
import logging
from itertools import islice
from typing import Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

from ..data.schemas import ExtensionPair, PackingPair
from ..errors import NoMoveApplies, PreconditionViolated
from ..graph.classify import classify
from ..graph.core import Graph, delete_vertices, enumerate_triangles, is_bipartite

logger = logging.getLogger(__name__)

WEIGHTS = (4, 2, 1)
ODD_CYCLE_LIMIT = 5_000


def check_weights(weights: Tuple[int, int, int]) -> None:
    k1, k2, k3 = weights
    if not (k1 > k2 > k3 and k1 > 2 * k3):
        raise PreconditionViolated(f"weights {weights} need k1 > k2 > k3 and k1 > 2*k3")


class PairState:
    """Mutable (X, Y) with the triangle bookkeeping the moves need"""

    def __init__(self, g: Graph, i: int, weights: Tuple[int, int, int] = WEIGHTS):
        check_weights(weights)
        self.g = g
        self.i = i
        self.dist = g.distances().matrix
        self.y_radius = 4 if i == 0 else 3
        self.triangles = [t.vertices for t in enumerate_triangles(g)]
        self.triangles_of: Dict[int, List[int]] = {}
        for index, t in enumerate(self.triangles):
            for v in t:
                self.triangles_of.setdefault(v, []).append(index)

        profile = classify(g)
        heavy = set(profile.heavy)
        rich = set(profile.rich)
        k1, k2, k3 = weights
        self.weights = weights
        self.weight: Dict[int, int] = {}
        for v in self.triangles_of:
            if g.degree(v) == 2 or v in rich:
                self.weight[v] = k1
            elif v not in heavy:
                self.weight[v] = k2
            else:
                self.weight[v] = k3
        self.x: Set[int] = set()
        self.y: Set[int] = set()

    # -- bookkeeping ------------------------------------------------------
    def members(self) -> Set[int]:
        return self.x | self.y

    def theta(self) -> int:
        return sum(self.weight[v] for v in self.members())

    def gamma(self) -> int:
        taken = self.members()
        return sum(1 for t in self.triangles if not taken.intersection(t))

    def score(self) -> Tuple[int, int]:
        return self.theta(), -self.gamma()

    def radius(self, which: str) -> int:
        return 2 if which == "x" else self.y_radius

    def blockers(self, v: int, which: str) -> Set[int]:
        """Members that stop v from joining X (which='x') or Y"""
        out: Set[int] = set()
        same = self.x if which == "x" else self.y
        r = self.radius(which)
        for m in same:
            if self.dist[v, m] <= r:
                out.add(m)
        for index in self.triangles_of.get(v, ()):
            out.update(m for m in self.triangles[index] if m in self.x or m in self.y)
        out.discard(v)
        return out

    def can_add(self, v: int, which: str) -> bool:
        return v in self.triangles_of and v not in self.x and v not in self.y and not self.blockers(v, which)

    def add(self, v: int, which: str) -> None:
        (self.x if which == "x" else self.y).add(v)

    def remove(self, v: int) -> None:
        self.x.discard(v)
        self.y.discard(v)

    def snapshot(self) -> Tuple[frozenset, frozenset]:
        return frozenset(self.x), frozenset(self.y)

    def restore(self, snap: Tuple[frozenset, frozenset]) -> None:
        self.x, self.y = set(snap[0]), set(snap[1])

    def pair(self) -> PackingPair:
        return PackingPair(x=sorted(self.x), y=sorted(self.y), weights=self.weights,
                           theta=self.theta(), gamma=self.gamma())


def _priority(state: PairState, v: int) -> Tuple[int, int]:
    g = state.g
    if g.degree(v) == 2:
        rank = 0
    elif state.weight[v] == state.weights[0]:
        rank = 1
    elif state.weight[v] == state.weights[1]:
        rank = 2
    else:
        rank = 3
    return rank, v


def _seed(state: PairState) -> None:
    for t in state.triangles:
        if state.members().intersection(t):
            continue
        for v in sorted(t, key=lambda u: _priority(state, u)):
            if state.can_add(v, "x"):
                state.add(v, "x")
                break
            if state.can_add(v, "y"):
                state.add(v, "y")
                break


def _improve_once(state: PairState) -> Optional[str]:
    """Apply the first strictly improving exchange; describe it, or None at quiescence.

    For every triangle vertex v outside the pair and each side, the members
    blocking v (at most two) are evicted, v is inserted, and each evicted
    member is re-inserted on the other side when it fits.  This covers the
    add, swap, two-for-one and move-across exchanges.
    """
    base = state.score()
    candidates = sorted(v for v in state.triangles_of if v not in state.x and v not in state.y)
    for v in candidates:
        for which in ("x", "y"):
            blocking = state.blockers(v, which)
            if len(blocking) > 2:
                continue
            snap = state.snapshot()
            for m in blocking:
                state.remove(m)
            if not state.can_add(v, which):
                state.restore(snap)
                continue
            state.add(v, which)
            moved = []
            for m in sorted(blocking):
                other = "y" if m in snap[0] else "x"
                if state.can_add(m, other):
                    state.add(m, other)
                    moved.append(m)
            if state.score() > base:
                return f"{which}+{v} -{sorted(blocking)} moved={moved}"
            state.restore(snap)
    return None


def _odd_cycles(g: Graph, removed: Iterable[int], limit: int = ODD_CYCLE_LIMIT) -> int:
    rest, _ = delete_vertices(g, removed)
    if is_bipartite(rest):
        return 0
    cycles = islice(nx.simple_cycles(rest.to_networkx()), limit)
    return sum(1 for cycle in cycles if len(cycle) % 2 == 1)


def maximum_packing_pair(g: Graph, i: int, weights: Tuple[int, int, int] = WEIGHTS) -> PairState:
    """Greedy seed plus exchange moves until no move raises (theta, -gamma)"""
    state = PairState(g, i, weights)
    _seed(state)
    steps = 0
    while True:
        move = _improve_once(state)
        if move is None:
            break
        steps += 1
        logger.debug(f"packing pair move {steps}: {move}")
    if state.gamma() > 0:
        raise NoMoveApplies({"x": sorted(state.x), "y": sorted(state.y), "gamma": state.gamma()})
    return state


def packing_pair_search(g: Graph, i: int, weights: Tuple[int, int, int] = WEIGHTS) -> ExtensionPair:
    """Packing pair with an extension whose remainder is bipartite.

    When an odd cycle C with V(G) = N[C] blocks every move the cycle is
    returned as ``dominated_cycle`` and the remainder may stay non-bipartite.
    """
    if i not in (0, 1):
        raise PreconditionViolated(f"i must be 0 or 1, got {i}")
    profile = classify(g)
    if profile.three_k > i:
        raise PreconditionViolated(f"graph is (3,{profile.three_k})-saturated, need (3,{i})")
    if profile.had_three_vertex and profile.g3 != 3:
        raise PreconditionViolated("g3 must be 3")

    state = maximum_packing_pair(g, i, weights)
    xt, yt = set(state.x), set(state.y)
    dist = state.dist

    def fits(v: int, side: Set[int], radius: int) -> bool:
        return all(dist[v, m] > radius for m in side)

    while True:
        rest, old_to_new = delete_vertices(g, xt | yt)
        split = is_bipartite(rest)
        if split:
            break
        new_to_old = {new: old for old, new in old_to_new.items()}
        cycle = [new_to_old[v] for v in split.odd_cycle]
        current = _odd_cycles(g, xt | yt)

        options = []
        for v in cycle:
            taken = xt | yt
            if fits(v, xt, 2):
                options.append((_odd_cycles(g, taken | {v}), 0, v))
            if fits(v, yt, state.y_radius):
                options.append((_odd_cycles(g, taken | {v}), 1, v))
        if options:
            phi, side, v = min(options)
            (xt if side == 0 else yt).add(v)
            logger.debug(f"extension adds {v} to {'XT' if side == 0 else 'YT'}: phi {current} -> {phi}")
            continue

        swapped = _swap_member(g, state, xt, yt, cycle, current)
        if swapped:
            continue

        closed = set(cycle)
        for v in cycle:
            closed.update(g.adjacency[v])
        if len(closed) == g.n:
            logger.debug(f"odd cycle of order {len(cycle)} dominates the graph")
            return ExtensionPair(pair=state.pair(), xt=sorted(xt), yt=sorted(yt),
                                 phi=current, dominated_cycle=cycle)
        raise NoMoveApplies({"xt": sorted(xt), "yt": sorted(yt), "cycle": cycle})

    return ExtensionPair(pair=state.pair(), xt=sorted(xt), yt=sorted(yt), phi=0)


def _swap_member(g: Graph, state: PairState, xt: Set[int], yt: Set[int],
                 cycle: List[int], current: int) -> bool:
    """Trade an X member u for its cycle neighbour x when that lowers phi"""
    dist = state.dist
    for x in cycle:
        for u in g.adjacency[x]:
            if u not in state.x or g.degree(u) != 3:
                continue
            base = state.score()
            snap = state.snapshot()
            state.remove(u)
            if not state.can_add(x, "x") or not all(dist[x, m] > 2 for m in xt - {u} - state.x):
                state.restore(snap)
                continue
            state.add(x, "x")
            if state.gamma() > 0 or state.score() < base:
                state.restore(snap)
                continue
            trial = (xt - {u}) | {x}
            if _odd_cycles(g, trial | yt) < current:
                xt.discard(u)
                xt.add(x)
                logger.debug(f"extension swaps X member {u} for {x}")
                return True
            state.restore(snap)
    return False
