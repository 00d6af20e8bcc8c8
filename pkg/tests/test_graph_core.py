import math

import networkx as nx
import pytest
from hypothesis import given, settings

from src.errors import MalformedEdge
from src.graph.core import (
    CyclePath,
    Graph,
    build_graph,
    connected_components,
    diameter,
    enumerate_triangles,
    from_networkx,
    induced_power_subgraph,
    induced_subgraph,
    delete_vertices,
    is_bipartite,
    shortest_cycle_path_through,
    shortest_cycle_through,
)

from .strategies import complete, cycle, path, subcubic_graphs


@pytest.mark.parametrize("edges, reason", [
    ([(0, 0)], "loop"),
    ([(0, 1), (1, 0)], "duplicate"),
    ([(0, 3)], "range"),
    ([(0, -1)], "range"),
    ([("a", 1)], "integers"),
])
def test_build_graph_rejects_malformed_edges(edges, reason):
    with pytest.raises(MalformedEdge) as info:
        build_graph(3, edges)
    assert reason in info.value.reason


def test_graph_basics():
    g = build_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert g.n == 4 and g.m == 4
    assert g.neighbors(2) == (0, 1, 3)
    assert g.max_degree == 3 and g.min_degree == 1
    assert g.edges() == [(0, 1), (0, 2), (1, 2), (2, 3)]
    assert g == build_graph(4, [(2, 3), (0, 2), (1, 2), (0, 1)])
    assert len({g, build_graph(4, [(2, 3), (0, 2), (1, 2), (0, 1)])}) == 1


def test_from_networkx_relabels_in_sorted_order():
    h = nx.Graph([("b", "c"), ("a", "b")])
    g, nodes = from_networkx(h)
    assert nodes == ["a", "b", "c"]
    assert g.edges() == [(0, 1), (1, 2)]


@settings(max_examples=60, deadline=None)
@given(subcubic_graphs(max_n=12))
def test_distances_match_networkx(g: Graph):
    lengths = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
    dm = g.distances()
    for u in range(g.n):
        for v in range(g.n):
            expected = lengths[u].get(v, math.inf)
            assert dm.dist(u, v) == expected


@settings(max_examples=60, deadline=None)
@given(subcubic_graphs(max_n=12))
def test_shortest_cycle_through_by_edge_removal(g: Graph):
    h = g.to_networkx()
    for v in range(g.n):
        best = math.inf
        for u in g.neighbors(v):
            h.remove_edge(u, v)
            if nx.has_path(h, u, v):
                best = min(best, 1 + nx.shortest_path_length(h, u, v))
            h.add_edge(u, v)
        assert shortest_cycle_through(g, v) == best


@settings(max_examples=60, deadline=None)
@given(subcubic_graphs(max_n=12))
def test_shortest_cycle_path_is_a_cycle(g: Graph):
    for v in range(g.n):
        found = shortest_cycle_path_through(g, v)
        if found is None:
            assert shortest_cycle_through(g, v) == math.inf
            continue
        assert found[0] == v
        assert CyclePath(tuple(found), "cycle").is_valid_in(g)
        assert len(found) == shortest_cycle_through(g, v)


@settings(max_examples=60, deadline=None)
@given(subcubic_graphs(max_n=12))
def test_bipartite_matches_networkx(g: Graph):
    result = is_bipartite(g)
    assert bool(result) == nx.is_bipartite(g.to_networkx())
    if result:
        for u, v in g.edges():
            assert result.labels[u] != result.labels[v]
    else:
        assert len(result.odd_cycle) % 2 == 1
        assert CyclePath(tuple(result.odd_cycle), "cycle").is_valid_in(g)


@settings(max_examples=60, deadline=None)
@given(subcubic_graphs(max_n=12))
def test_components_and_triangles_match_networkx(g: Graph):
    h = g.to_networkx()
    ours = sorted(tuple(c) for c in connected_components(g))
    theirs = sorted(tuple(sorted(c)) for c in nx.connected_components(h))
    assert ours == theirs
    assert len(enumerate_triangles(g)) == sum(nx.triangles(h).values()) // 3


@settings(max_examples=40, deadline=None)
@given(subcubic_graphs(max_n=10))
def test_induced_power_subgraph(g: Graph):
    members = list(range(0, g.n, 2))
    power = induced_power_subgraph(g, members, 3)
    dm = g.distances()
    for i, a in enumerate(members):
        for j, b in enumerate(members):
            if i != j:
                assert power.has_edge(i, j) == (dm.dist(a, b) <= 3)


def test_induced_subgraph_and_deletion():
    g = cycle(6)
    h, old_to_new = induced_subgraph(g, [0, 1, 2, 4])
    assert old_to_new == {0: 0, 1: 1, 2: 2, 4: 3}
    assert h.edges() == [(0, 1), (1, 2)]
    rest, _ = delete_vertices(g, [0, 3])
    assert len(connected_components(rest)) == 2


def test_diameter():
    assert diameter(cycle(7)) == 3
    assert diameter(path(5)) == 4
    assert diameter(complete(4)) == 1
    assert diameter(build_graph(0, [])) == 0
    assert diameter(build_graph(2, [])) == math.inf


def test_distance_matrix_is_cached_and_read_only():
    g = cycle(5)
    dm = g.distances()
    assert g.distances() is dm
    with pytest.raises(ValueError):
        dm.matrix[0, 1] = 7
    assert list(dm.within(0, 1)) == [1, 4]
    assert dm.eccentricity(0) == 2
