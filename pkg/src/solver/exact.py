"""Complete backtracking decision procedure for S-packing colorability.

Vertices are assigned in a static BFS order (largest component first).  Each
class keeps a bitmask of the vertices it may no longer receive; assigning a
vertex ORs its distance ball into that mask, and a branch dies as soon as an
unassigned vertex is blocked for every class.
"""
import logging
import multiprocessing as mp
import time
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..data.schemas import PackingColoring, SolveConfig, SolveOutcome, SolveStatus, SSequence
from ..errors import InternalStructureError, SolverTimeout, TooLarge
from ..graph.core import Graph, build_graph, connected_components
from ..packing.coloring import make_coloring, verify

logger = logging.getLogger(__name__)

SMALL_N = 10
SMALL_K = 6
CHUNK = 1 << 16


class _BudgetExhausted(Exception):
    pass


def search_order(g: Graph) -> List[int]:
    """BFS order from the least vertex of each component, largest component first"""
    components = sorted(connected_components(g), key=lambda comp: (-len(comp), comp[0]))
    order: List[int] = []
    for comp in components:
        seen = {comp[0]}
        queue = deque([comp[0]])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


class PackingSearch:
    """One depth-first search over a fixed vertex order"""

    def __init__(self, g: Graph, s: SSequence, cfg: SolveConfig):
        self.g = g
        self.s = s
        self.cfg = cfg
        self.order = search_order(g)
        self.k = s.k
        dist = g.distances().matrix

        # ball[r][v]: bitmask of vertices w != v with dist(v, w) <= r
        self.ball: Dict[int, List[int]] = {}
        for r in set(s.values):
            masks = []
            for v in range(g.n):
                row = dist[v]
                mask = 0
                for w in np.flatnonzero((row >= 1) & (row <= r)):
                    mask |= 1 << int(w)
                masks.append(mask)
            self.ball[r] = masks

        # classes sharing a value, in position order
        self.group_of = [0] * self.k
        groups: Dict[int, int] = {}
        for i, value in enumerate(s.values):
            groups.setdefault(value, len(groups))
            self.group_of[i] = groups[value]
        self.first_of_group = {}
        for i in range(self.k):
            self.first_of_group.setdefault(self.group_of[i], i)

        self.nodes = 0
        self.deadline = None

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.cfg.node_budget:
            raise _BudgetExhausted()
        if self.deadline is not None and (self.nodes & 0x3FF) == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted()

    def candidates(self, v: int, forbidden: List[int], used: List[bool]) -> List[int]:
        bit = 1 << v
        out = []
        skip_groups = set()
        for c in range(self.k):
            if forbidden[c] & bit:
                continue
            if self.cfg.symmetry_breaking and not used[c]:
                group = self.group_of[c]
                # only the lowest unused class of an equal-value group is tried
                if group in skip_groups:
                    continue
                skip_groups.add(group)
            out.append(c)
        return out

    def assign(self, v: int, c: int, forbidden: List[int], unassigned: int) -> Optional[List[int]]:
        """New forbidden masks after v -> c, or None if some vertex is left with no class"""
        updated = list(forbidden)
        updated[c] |= self.ball[self.s.values[c]][v]
        blocked = unassigned
        for mask in updated:
            blocked &= mask
            if not blocked:
                return updated
        return None

    def run(self, prefix: Sequence[int] = ()) -> Optional[List[int]]:
        """Classes (0-based) per vertex, or None if no completion of prefix exists"""
        if self.cfg.time_budget is not None:
            self.deadline = time.monotonic() + self.cfg.time_budget
        n = self.g.n
        colors = [-1] * n
        forbidden = [0] * self.k
        used = [False] * self.k
        unassigned = (1 << n) - 1

        for depth, c in enumerate(prefix):
            v = self.order[depth]
            if forbidden[c] & (1 << v):
                return None
            unassigned &= ~(1 << v)
            nxt = self.assign(v, c, forbidden, unassigned)
            if nxt is None:
                return None
            forbidden = nxt
            colors[v] = c
            used[c] = True

        if self._extend(len(prefix), colors, forbidden, used, unassigned):
            return colors
        return None

    def _extend(self, depth: int, colors: List[int], forbidden: List[int],
                used: List[bool], unassigned: int) -> bool:
        if depth == len(self.order):
            return True
        v = self.order[depth]
        remaining = unassigned & ~(1 << v)
        for c in self.candidates(v, forbidden, used):
            self._tick()
            nxt = self.assign(v, c, forbidden, remaining)
            if nxt is None:
                continue
            colors[v] = c
            was_used = used[c]
            used[c] = True
            if self._extend(depth + 1, colors, nxt, used, remaining):
                return True
            used[c] = was_used
            colors[v] = -1
        return False

    def prefixes(self, depth: int) -> List[Tuple[int, ...]]:
        """All consistent class choices for the first ``depth`` vertices, in search order"""
        out: List[Tuple[int, ...]] = []
        depth = min(depth, len(self.order))

        def walk(d, chosen, forbidden, used, unassigned):
            if d == depth:
                out.append(tuple(chosen))
                return
            v = self.order[d]
            remaining = unassigned & ~(1 << v)
            for c in self.candidates(v, forbidden, used):
                nxt = self.assign(v, c, forbidden, remaining)
                if nxt is None:
                    continue
                was_used = used[c]
                used[c] = True
                walk(d + 1, chosen + [c], nxt, used, remaining)
                used[c] = was_used

        walk(0, [], [0] * self.k, [False] * self.k, (1 << self.g.n) - 1)
        return out


def _run_branch(n: int, edges: List[Tuple[int, int]], values: Tuple[int, ...],
                cfg_data: dict, prefix: Tuple[int, ...]) -> Tuple[str, Optional[List[int]], int]:
    g = build_graph(n, edges)
    search = PackingSearch(g, SSequence(values=values), SolveConfig(**cfg_data))
    try:
        colors = search.run(prefix)
    except _BudgetExhausted:
        return SolveStatus.TIMEOUT.value, None, search.nodes
    if colors is None:
        return SolveStatus.NOT_COLORABLE.value, None, search.nodes
    return SolveStatus.COLORABLE.value, colors, search.nodes


def _decide_parallel(g: Graph, s: SSequence, cfg: SolveConfig) -> Tuple[str, Optional[List[int]], int]:
    search = PackingSearch(g, s, cfg)
    branches = search.prefixes(depth=3)
    if not branches:
        return SolveStatus.NOT_COLORABLE.value, None, 0
    args = [(g.n, g.edges(), s.values, cfg.model_dump(), prefix) for prefix in branches]
    with mp.get_context("spawn").Pool(processes=cfg.workers) as pool:
        results = pool.starmap(_run_branch, args)
    nodes = sum(r[2] for r in results)
    # the first decisive branch in search order wins, as in a sequential run
    for status, colors, _ in results:
        if status != SolveStatus.NOT_COLORABLE.value:
            return status, colors, nodes
    return SolveStatus.NOT_COLORABLE.value, None, nodes


def decide(g: Graph, s: SSequence, cfg: Optional[SolveConfig] = None) -> SolveOutcome:
    """Decide S-packing colorability; Colorable carries a verified witness"""
    cfg = cfg or SolveConfig()
    started = time.monotonic()
    if g.n == 0:
        return SolveOutcome(status=SolveStatus.COLORABLE, coloring=make_coloring([]))

    if cfg.workers > 1 and g.n > 3:
        status, colors, nodes = _decide_parallel(g, s, cfg)
    else:
        status, colors, nodes = _run_branch(g.n, g.edges(), s.values, cfg.model_dump(), ())

    elapsed = time.monotonic() - started
    logger.debug(f"decide n={g.n} S=({s}) -> {status} after {nodes} nodes in {elapsed:.3f}s")
    if status != SolveStatus.COLORABLE.value:
        return SolveOutcome(status=status, nodes=nodes, elapsed=elapsed)

    coloring = make_coloring(c + 1 for c in colors)
    if verify(g, s, coloring):
        raise InternalStructureError("exact search produced an invalid witness")
    return SolveOutcome(status=SolveStatus.COLORABLE, coloring=coloring, nodes=nodes, elapsed=elapsed)


def decide_or_raise(g: Graph, s: SSequence, cfg: Optional[SolveConfig] = None) -> SolveOutcome:
    outcome = decide(g, s, cfg)
    if outcome.status == SolveStatus.TIMEOUT:
        raise SolverTimeout(outcome.nodes, outcome.elapsed)
    return outcome


def decide_all_small(g: Graph, s: SSequence) -> SolveOutcome:
    """Plain enumeration of all k^n assignments; witness is the lexicographically least"""
    n, k = g.n, s.k
    if n > SMALL_N or k > SMALL_K:
        raise TooLarge(n, k)
    started = time.monotonic()
    if n == 0:
        return SolveOutcome(status=SolveStatus.COLORABLE, coloring=make_coloring([]))

    dist = g.distances().matrix
    values = np.asarray(s.values)
    # conflict[p, c]: pair p may not share class c
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if dist[u, v] >= 1]
    conflict = np.array([dist[u, v] <= values for u, v in pairs], dtype=bool).reshape(len(pairs), k)
    us = np.array([p[0] for p in pairs], dtype=np.int64)
    vs = np.array([p[1] for p in pairs], dtype=np.int64)

    total = k ** n
    powers = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    checked = 0
    for start in range(0, total, CHUNK):
        index = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        assignment = (index[:, None] // powers[None, :]) % k
        valid = np.ones(index.size, dtype=bool)
        if pairs:
            a = assignment[:, us]
            same = a == assignment[:, vs]
            clash = same & conflict[np.arange(len(pairs))[None, :], a]
            valid = ~clash.any(axis=1)
        checked += index.size
        hits = np.flatnonzero(valid)
        if hits.size:
            coloring = make_coloring(assignment[hits[0]] + 1)
            return SolveOutcome(status=SolveStatus.COLORABLE, coloring=coloring, nodes=checked,
                                elapsed=time.monotonic() - started)
    return SolveOutcome(status=SolveStatus.NOT_COLORABLE, nodes=checked, elapsed=time.monotonic() - started)


def packing_chromatic_number(g: Graph, max_k: int = 12, cfg: Optional[SolveConfig] = None) -> Optional[int]:
    """Least k with a (1,2,...,k)-packing coloring, or None if above max_k or out of budget"""
    for k in range(1, max_k + 1):
        outcome = decide(g, SSequence(values=tuple(range(1, k + 1))), cfg)
        if outcome.status == SolveStatus.COLORABLE:
            return k
        if outcome.status == SolveStatus.TIMEOUT:
            return None
    return None


def complete_coloring(g: Graph, s: SSequence, fixed: Dict[int, int],
                      cfg: Optional[SolveConfig] = None) -> Optional[PackingColoring]:
    """Exact completion of a partial coloring (1-based classes); None if impossible"""
    cfg = cfg or SolveConfig()
    search = PackingSearch(g, s, cfg.model_copy(update={"symmetry_breaking": False}))
    # the fixed vertices go first so the prefix pins them
    rest = [v for v in search.order if v not in fixed]
    search.order = sorted(fixed) + rest
    prefix = [fixed[v] - 1 for v in sorted(fixed)]
    try:
        colors = search.run(prefix)
    except _BudgetExhausted:
        return None
    if colors is None:
        return None
    return make_coloring(c + 1 for c in colors)
