"""Immutable graph representation and the distance/cycle queries built on it."""
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from ..errors import MalformedEdge


UNREACHABLE = -1

Length = Union[int, float]


class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency"""

    __slots__ = ("n", "adjacency", "m", "_distances")

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        self.n = n
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self.m = sum(len(nbrs) for nbrs in self.adjacency) // 2
        self._distances: Optional["DistanceMatrix"] = None

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def distances(self) -> "DistanceMatrix":
        # computed once; the graph never changes
        if self._distances is None:
            self._distances = all_pairs_distances(self)
        return self._distances

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges())
        return h

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class DistanceMatrix:
    """All-pairs hop distances; unreachable pairs hold the UNREACHABLE sentinel"""

    def __init__(self, matrix: np.ndarray):
        self.matrix = matrix
        self.matrix.setflags(write=False)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def dist(self, u: int, v: int) -> Length:
        d = int(self.matrix[u, v])
        return math.inf if d == UNREACHABLE else d

    def within(self, v: int, radius: int) -> np.ndarray:
        """Vertices w != v with dist(v, w) <= radius"""
        row = self.matrix[v]
        mask = (row >= 1) & (row <= radius)
        return np.flatnonzero(mask)

    def ball_mask(self, v: int, radius: int) -> np.ndarray:
        row = self.matrix[v]
        return (row >= 0) & (row <= radius)

    def eccentricity(self, v: int) -> Length:
        row = self.matrix[v]
        if (row == UNREACHABLE).any():
            return math.inf
        return int(row.max()) if row.size else 0


@dataclass(frozen=True)
class CyclePath:
    vertices: Tuple[int, ...]
    kind: str = "cycle"

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def ends(self) -> Tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
            return False
        if self.kind == "cycle":
            return len(vs) >= 3 and g.has_edge(vs[-1], vs[0])
        return True


@dataclass
class BipartiteResult:
    bipartite: bool
    labels: List[int] = field(default_factory=list)
    odd_cycle: List[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.bipartite


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build a simple graph, rejecting loops, duplicates and out-of-range endpoints"""
    if n < 0:
        raise MalformedEdge(None, None, f"negative vertex count {n}")
    adjacency: List[set] = [set() for _ in range(n)]
    for edge in edges:
        u, v = edge
        if not (isinstance(u, (int, np.integer)) and isinstance(v, (int, np.integer))):
            raise MalformedEdge(u, v, "endpoints must be integers")
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedEdge(u, v, f"endpoint out of range 0..{n - 1}")
        if u == v:
            raise MalformedEdge(u, v, "loop")
        if v in adjacency[u]:
            raise MalformedEdge(u, v, "duplicate edge")
        adjacency[u].add(int(v))
        adjacency[v].add(int(u))
    return Graph(n, adjacency)


def from_networkx(h: nx.Graph) -> Tuple[Graph, List]:
    nodes = sorted(h.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return build_graph(len(nodes), [(index[a], index[b]) for a, b in h.edges()]), nodes


def bfs_depths(g: Graph, root: int) -> List[int]:
    depth = [UNREACHABLE] * g.n
    depth[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if depth[w] == UNREACHABLE:
                depth[w] = depth[u] + 1
                queue.append(w)
    return depth


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    matrix = np.full((g.n, g.n), UNREACHABLE, dtype=np.int32)
    for v in range(g.n):
        matrix[v] = bfs_depths(g, v)
    return DistanceMatrix(matrix)


def bfs_tree(g: Graph, root: int) -> List[Optional[int]]:
    """Parent array of the BFS tree from root: -1 at the root, None if unreachable"""
    parent: List[Optional[int]] = [None] * g.n
    parent[root] = -1
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if parent[w] is None:
                parent[w] = u
                queue.append(w)
    return parent


def connected_components(g: Graph) -> List[List[int]]:
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        component = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    component.append(w)
                    queue.append(w)
        components.append(sorted(component))
    return components


def enumerate_triangles(g: Graph) -> List[CyclePath]:
    triangles = []
    for u in range(g.n):
        for v in g.adjacency[u]:
            if v <= u:
                continue
            for w in g.adjacency[v]:
                if w > v and g.has_edge(u, w):
                    triangles.append(CyclePath((u, v, w), "cycle"))
    return triangles


def shortest_cycle_path_through(g: Graph, v: int) -> Optional[List[int]]:
    """A shortest cycle through v as a vertex list starting at v, or None"""
    depth = [UNREACHABLE] * g.n
    parent = [-1] * g.n
    branch = [-1] * g.n
    depth[v] = 0
    queue = deque()
    for u in g.adjacency[v]:
        depth[u] = 1
        parent[u] = v
        branch[u] = u
        queue.append(u)
    best = None
    best_len = math.inf
    while queue:
        a = queue.popleft()
        if 2 * depth[a] + 1 > best_len:
            break
        for b in g.adjacency[a]:
            if b == v:
                continue
            if depth[b] == UNREACHABLE:
                depth[b] = depth[a] + 1
                parent[b] = a
                branch[b] = branch[a]
                queue.append(b)
            elif branch[b] != branch[a]:
                length = depth[a] + depth[b] + 1
                if length < best_len:
                    best_len = length
                    best = (a, b)
    if best is None:
        return None

    def climb(x: int) -> List[int]:
        path = []
        while x != v:
            path.append(x)
            x = parent[x]
        return path

    a, b = best
    return [v] + climb(a)[::-1] + climb(b)


def shortest_cycle_through(g: Graph, v: int) -> Length:
    """Local girth g(v); math.inf when v lies on no cycle"""
    cycle = shortest_cycle_path_through(g, v)
    return math.inf if cycle is None else len(cycle)


def is_bipartite(g: Graph) -> BipartiteResult:
    """Two-part labeling, or an odd cycle as witness"""
    label = [-1] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if label[start] != -1:
            continue
        label[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if label[w] == -1:
                    label[w] = 1 - label[u]
                    parent[w] = u
                    queue.append(w)
                elif label[w] == label[u]:
                    return BipartiteResult(False, odd_cycle=_tree_cycle(parent, u, w))
    return BipartiteResult(True, labels=label)


def _tree_cycle(parent: List[int], u: int, w: int) -> List[int]:
    """Cycle closed by non-tree edge uw through the lowest common ancestor"""
    ancestors_u = [u]
    while parent[ancestors_u[-1]] != -1:
        ancestors_u.append(parent[ancestors_u[-1]])
    on_u = {x: i for i, x in enumerate(ancestors_u)}
    path_w = [w]
    while path_w[-1] not in on_u:
        path_w.append(parent[path_w[-1]])
    lca = path_w[-1]
    return ancestors_u[: on_u[lca] + 1] + path_w[:-1][::-1]


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Induced subgraph on ``keep``; returns the graph and the old -> new id map"""
    kept = sorted(set(keep))
    old_to_new = {old: new for new, old in enumerate(kept)}
    adjacency = [[old_to_new[w] for w in g.adjacency[old] if w in old_to_new] for old in kept]
    return Graph(len(kept), adjacency), old_to_new


def delete_vertices(g: Graph, s: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    removed = set(s)
    return induced_subgraph(g, (v for v in range(g.n) if v not in removed))


def induced_power_subgraph(g: Graph, t: Iterable[int], d: int) -> Graph:
    """Graph on sorted(t) (vertex i is sorted(t)[i]); edge iff dist_G <= d"""
    members = sorted(set(t))
    dist = g.distances().matrix
    adjacency: List[List[int]] = [[] for _ in members]
    for i, a in enumerate(members):
        for j in range(i + 1, len(members)):
            b = members[j]
            if 1 <= dist[a, b] <= d:
                adjacency[i].append(j)
                adjacency[j].append(i)
    return Graph(len(members), adjacency)


def diameter(g: Graph) -> Length:
    if g.n == 0:
        return 0
    return max(g.distances().eccentricity(v) for v in range(g.n))