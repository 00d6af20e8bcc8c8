"""Random class-constrained test graphs.

Graphs are assembled from short-cycle gadgets (triangles, squares, diamonds,
longer rings) whose "ports" are wired together by bridges of 2-vertices,
padded with pendant tails, randomly relabelled and finally checked with
classify.  Which gadgets and ports are allowed is derived from the target
constraint, so the rejection step rarely fires for the tighter classes.
"""
import logging
from typing import List, Optional, Set, Tuple

import networkx as nx
import numpy as np

from ..errors import GenerationExhausted
from ..graph.classify import in_class
from ..graph.core import Graph, build_graph, connected_components
from .schemas import ClassConstraint, GenSpec

logger = logging.getLogger(__name__)

LONGEST_RING = 8


class _Builder:
    """Edge list under construction; every port takes at most one outside edge"""

    def __init__(self, rng: np.random.Generator):
        self.rng = rng
        self.n = 0
        self.edges: List[Tuple[int, int]] = []
        self.ports: List[List[int]] = []
        # port -> number of ports next to it on its own gadget
        self.crowding = {}

    def add_vertices(self, count: int) -> List[int]:
        out = list(range(self.n, self.n + count))
        self.n += count
        return out

    def add_ring(self, length: int, port_positions: List[int]) -> int:
        vs = self.add_vertices(length)
        self.edges.extend((vs[i], vs[(i + 1) % length]) for i in range(length))
        ports = [vs[i] for i in port_positions]
        marked = set(port_positions)
        for i in port_positions:
            self.crowding[vs[i]] = ((i - 1) % length in marked) + ((i + 1) % length in marked)
        self.ports.append(ports)
        return len(self.ports) - 1

    def add_diamond(self, port_count: int) -> int:
        a, b, c, d = self.add_vertices(4)
        self.edges.extend([(a, b), (b, c), (c, d), (d, a), (a, c)])
        ports = [b, d][:port_count]
        for p in ports:
            self.crowding[p] = 2
        self.ports.append(ports)
        return len(self.ports) - 1

    def take_port(self, gadget: int) -> Optional[int]:
        free = self.ports[gadget]
        if not free:
            return None
        i = int(self.rng.integers(len(free)))
        return free.pop(i)

    def bridge(self, u: int, v: int, length: int) -> None:
        """Join u and v by a path with length - 1 inner 2-vertices"""
        inner = self.add_vertices(length - 1)
        chain = [u] + inner + [v]
        self.edges.extend(zip(chain, chain[1:]))

    def tail(self, u: int, length: int) -> None:
        chain = [u] + self.add_vertices(length)
        self.edges.extend(zip(chain, chain[1:]))

    def graph(self) -> Graph:
        perm = self.rng.permutation(self.n)
        return build_graph(self.n, [(int(perm[u]), int(perm[v])) for u, v in self.edges])


def _ring_lengths(c: ClassConstraint) -> List[int]:
    if c.claw_free:
        return [3]
    lo = 3 if c.g3_min is None else max(3, int(c.g3_min))
    hi = 6 if c.g3_max is None else min(LONGEST_RING, int(c.g3_max))
    if lo >= 5 and c.g3_max is None:
        hi = LONGEST_RING
    return list(range(lo, max(lo, hi) + 1))


def _port_positions(rng: np.random.Generator, length: int, limit: Optional[int]) -> List[int]:
    """Random port set; each port has at most ``limit`` ports beside it on the ring"""
    order = [int(i) for i in rng.permutation(length)]
    wanted = int(rng.integers(1, length + 1))
    chosen: Set[int] = set()
    for i in order:
        if len(chosen) == wanted:
            break
        trial = chosen | {i}
        if limit is not None and any(
            ((j - 1) % length in trial) + ((j + 1) % length in trial) > limit for j in trial
        ):
            continue
        chosen = trial
    return sorted(chosen)


def _linear(spec: GenSpec, rng: np.random.Generator, target: int) -> Graph:
    pieces = [target]
    if not spec.connected and target >= 6:
        cut = int(rng.integers(3, target - 2))
        pieces = [cut, target - cut]
    edges, start = [], 0
    for size in pieces:
        vs = list(range(start, start + size))
        edges.extend(zip(vs, vs[1:]))
        if size >= 3 and rng.random() < 0.5:
            edges.append((vs[-1], vs[0]))
        start += size
    perm = rng.permutation(target)
    return build_graph(target, [(int(perm[u]), int(perm[v])) for u, v in edges])


def _cubic(spec: GenSpec, rng: np.random.Generator) -> Optional[Graph]:
    lo, hi = spec.sizes
    seed = int(rng.integers(2**31))
    if spec.constraint.claw_free:
        # every vertex of a cubic graph blown up into a triangle
        choices = [m for m in range(4, hi // 3 + 1, 2) if 3 * m >= lo]
        if not choices:
            return None
        m = int(rng.choice(choices))
        base = nx.random_regular_graph(3, m, seed=seed)
        edges = [(3 * v + i, 3 * v + (i + 1) % 3) for v in range(m) for i in range(3)]
        slot = [0] * m
        for u, v in base.edges():
            edges.append((3 * u + slot[u], 3 * v + slot[v]))
            slot[u] += 1
            slot[v] += 1
        perm = rng.permutation(3 * m)
        return build_graph(3 * m, [(int(perm[u]), int(perm[v])) for u, v in edges])
    choices = [n for n in range(max(4, lo), hi + 1) if n % 2 == 0]
    if not choices:
        return None
    n = int(rng.choice(choices))
    base = nx.random_regular_graph(3, n, seed=seed)
    return build_graph(n, [(int(u), int(v)) for u, v in base.edges()])


def _assemble(spec: GenSpec, rng: np.random.Generator, target: int) -> Optional[Graph]:
    c = spec.constraint
    lo, hi = spec.sizes
    limit = c.saturation_max
    builder = _Builder(rng)
    lengths = _ring_lengths(c)
    diamonds = c.diamond_free is not True and 3 in lengths and (limit is None or limit >= 2)
    direct_p = 0.0 if limit == 0 else float(rng.uniform(0.0, 0.5))

    def new_gadget() -> int:
        if diamonds and rng.random() < 0.15:
            ports = 2 if limit is None or limit >= 3 else 1
            return builder.add_diamond(int(rng.integers(1, ports + 1)))
        length = int(rng.choice(lengths))
        return builder.add_ring(length, _port_positions(rng, length, limit))

    def slack(u: int) -> bool:
        return limit is None or builder.crowding.get(u, 0) < limit

    def wire(u: int, v: int) -> None:
        adjacent = (u, v) in builder.edges or (v, u) in builder.edges
        if u != v and not adjacent and slack(u) and slack(v) and rng.random() < direct_p:
            builder.edges.append((u, v))
        else:
            builder.bridge(u, v, int(rng.integers(2, 5)))

    gadgets = [new_gadget()]
    while builder.n < target - 3:
        open_gadgets = [i for i in gadgets if builder.ports[i]]
        if not open_gadgets:
            break
        g = new_gadget()
        u = builder.take_port(int(rng.choice(open_gadgets)))
        wire(u, builder.take_port(g))
        gadgets.append(g)
        if builder.n > hi:
            return None

    # extra links close cycles through the bridges
    for _ in range(int(rng.integers(0, 3))):
        open_gadgets = [i for i in gadgets if builder.ports[i]]
        if len(open_gadgets) < 2 or builder.n + 3 > hi:
            break
        a, b = rng.choice(open_gadgets, size=2, replace=False)
        wire(builder.take_port(int(a)), builder.take_port(int(b)))

    # pendant tails, then pad up to the lower size bound
    leftover = [p for i in gadgets for p in builder.ports[i]]
    for p in leftover:
        if builder.n < hi and rng.random() < 0.25:
            builder.tail(p, int(rng.integers(1, min(3, hi - builder.n) + 1)))
            builder.ports = [[q for q in ports if q != p] for ports in builder.ports]
    while builder.n < lo:
        leftover = [p for ports in builder.ports for p in ports]
        if not leftover:
            return None
        p = leftover[int(rng.integers(len(leftover)))]
        builder.tail(p, min(lo - builder.n, 3))
        builder.ports = [[q for q in ports if q != p] for ports in builder.ports]
    if builder.n > hi:
        return None
    return builder.graph()


def _candidate(spec: GenSpec, rng: np.random.Generator) -> Optional[Graph]:
    c = spec.constraint
    lo, hi = spec.sizes
    target = int(rng.integers(lo, hi + 1))
    if c.max_degree_max is not None and c.max_degree_max <= 2:
        return _linear(spec, rng, target)
    if c.cubic:
        return _cubic(spec, rng)
    return _assemble(spec, rng, target)


def generate(spec: GenSpec) -> Graph:
    """A graph satisfying spec.constraint with order in spec.sizes; deterministic per seed"""
    lo, hi = spec.sizes
    if lo < 1 or hi < lo:
        raise ValueError(f"bad size range {spec.sizes}")
    rng = np.random.default_rng(spec.seed)
    for attempt in range(1, spec.max_attempts + 1):
        g = _candidate(spec, rng)
        if g is None or not lo <= g.n <= hi or g.max_degree > 3:
            continue
        if spec.connected and len(connected_components(g)) > 1:
            continue
        if in_class(g, spec.constraint):
            logger.debug(f"generated n={g.n} m={g.m} for {spec.constraint.label()} after {attempt} attempts")
            return g
    raise GenerationExhausted(spec.constraint.label(), spec.max_attempts)


def suite(constraint: ClassConstraint, count: int, sizes: Tuple[int, int] = (6, 48),
          seed: int = 2025, max_attempts: int = 2000) -> List[Graph]:
    """``count`` graphs of the class, the i-th generated from seed + i"""
    return [
        generate(GenSpec(constraint=constraint, sizes=sizes, seed=seed + i, max_attempts=max_attempts))
        for i in range(count)
    ]
