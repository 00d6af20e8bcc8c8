from typing import List, Tuple

from hypothesis import strategies as st

from src.data.schemas import SSequence
from src.graph.core import Graph, build_graph

# sequences the result table talks about
TABLE_SEQUENCES = [
    (1, 1, 2), (1, 1, 3), (1, 2, 2), (2, 2, 2, 2),
    (1, 1, 2, 2), (1, 1, 2, 3), (1, 1, 2, 4), (1, 1, 3, 3), (1, 2, 2, 2), (1, 2, 2, 3), (1, 2, 3, 3),
    (1, 1, 3, 3, 3), (1, 2, 2, 2, 2), (2, 2, 2, 2, 2), (2, 2, 2, 2, 3),
]


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def diamond() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def triangle_theta(inner: int = 3) -> Graph:
    """Two triangles a0a1a2, b0b1b2 with paths of ``inner`` 2-vertices from a_i to b_i"""
    edges: List[Tuple[int, int]] = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    n = 6
    for i in range(3):
        previous = i
        for _ in range(inner):
            edges.append((previous, n))
            previous = n
            n += 1
        edges.append((previous, 3 + i))
    return build_graph(n, edges)


@st.composite
def subcubic_graphs(draw, min_n: int = 1, max_n: int = 10, connected: bool = False) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    degree = [0] * n
    edges = set()

    def add(u: int, v: int) -> None:
        edges.add((min(u, v), max(u, v)))
        degree[u] += 1
        degree[v] += 1

    if connected:
        # random tree first; some earlier vertex always has degree < 3
        for v in range(1, n):
            open_slots = [u for u in range(v) if degree[u] < 3]
            add(v, draw(st.sampled_from(open_slots)))

    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        for u, v in draw(st.lists(st.sampled_from(pairs), max_size=2 * n, unique=True)):
            if (u, v) not in edges and degree[u] < 3 and degree[v] < 3:
                add(u, v)
    return build_graph(n, sorted(edges))


def table_sequences():
    return st.sampled_from(TABLE_SEQUENCES).map(lambda values: SSequence(values=values))


def small_sequences(max_k: int = 4):
    """Arbitrary short non-decreasing sequences"""
    return st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=max_k).map(
        lambda values: SSequence(values=tuple(sorted(values)))
    )


def triangle_dumbbell() -> Graph:
    """Triangles 0 1 2 and 6 7 8 joined by the path 0 3 4 5 6"""
    return build_graph(9, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (6, 8)])
