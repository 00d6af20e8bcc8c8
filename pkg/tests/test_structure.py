import itertools

import networkx as nx
import pytest

from src.colorers.three_saturated import THREE_ONE, THREE_TWO, THREE_ZERO
from src.colorers.two_saturated import TWO_SAT
from src.data.generator import suite
from src.errors import (
    K4Component,
    K4Detected,
    NoMoveApplies,
    NoTwoVertexOnOddCycle,
    PreconditionViolated,
)
from src.graph.core import Graph, build_graph, delete_vertices, enumerate_triangles, from_networkx, is_bipartite
from src.graph.classify import classify
from src.structure.decompose import decompose_2sat, find_dominated_cycle, find_good_cycle, triangle_two_vertices
from src.structure.packing_pair import check_weights, maximum_packing_pair, packing_pair_search
from src.structure.transversal import (
    brooks_3color,
    choose_transversal,
    odd_cycle_reps,
    transversal_from,
    triangle_clusters,
    triangle_transversal,
)

from .strategies import complete, cycle, diamond, star, triangle_dumbbell, triangle_theta

def _packing(g: Graph, members, radius: int) -> bool:
    dm = g.distances()
    return all(dm.dist(a, b) > radius for a, b in itertools.combinations(members, 2))


# -- path decomposition --------------------------------------------------------

def test_good_cycle_is_chordless():
    g = triangle_theta()
    found = find_good_cycle(g)
    assert found is not None and len(found) == 10
    assert found.is_valid_in(g)
    assert find_good_cycle(complete(3)) is None


def test_dominated_cycle():
    assert sorted(find_dominated_cycle(cycle(6))) == list(range(6))
    # the middle of an unused connecting path is two steps from any cycle
    assert find_dominated_cycle(triangle_theta()) is None


def test_decompose_triangle_theta():
    g = triangle_theta()
    decomposition = decompose_2sat(g)
    assert len(decomposition.y) == 2
    assert _packing(g, decomposition.y, 2)
    assert len(decomposition.paths) == 1 and len(decomposition.paths[0]) == 13
    covered = set(decomposition.y) | set(decomposition.paths[0])
    assert covered == set(range(g.n))
    order = decomposition.paths[0]
    assert all(g.has_edge(a, b) for a, b in zip(order, order[1:]))
    assert decomposition.trace[0].startswith("good-cycle:10")


@pytest.mark.parametrize("name, reason", [
    ("G10", "dominates"),
    ("G11", "saturated"),
])
def test_decompose_preconditions(named, name, reason):
    with pytest.raises(PreconditionViolated) as info:
        decompose_2sat(named[name])
    assert reason in info.value.which


def test_decompose_needs_a_three_vertex_and_connectivity():
    with pytest.raises(PreconditionViolated):
        decompose_2sat(cycle(6))
    two_thetas = build_graph(30, triangle_theta().edges() + [(u + 15, v + 15) for u, v in triangle_theta().edges()])
    with pytest.raises(PreconditionViolated):
        decompose_2sat(two_thetas)


def test_decompose_triangle_two_vertices():
    g = triangle_dumbbell()
    decomposition = decompose_2sat(g)
    assert decomposition.y == [1, 7]
    assert decomposition.paths == [[2, 0, 3, 4, 5, 6, 8]]
    assert decomposition.trace == ["D1:1", "D1:7"]


def test_decompose_invariants_on_generated_graphs(test_count):
    for g in suite(TWO_SAT, test_count, sizes=(8, 30), seed=21):
        try:
            decomposition = decompose_2sat(g)
        except PreconditionViolated:
            continue
        y, paths = decomposition.y, decomposition.paths
        assert _packing(g, y, 2)
        flat = [v for path in paths for v in path]
        assert sorted(y + flat) == list(range(g.n))
        special = triangle_two_vertices(g)
        dm = g.distances()
        for path in paths:
            assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
            assert len(path) >= (3 if special.intersection(path) else 4)
        for p, q in itertools.combinations(paths, 2):
            assert all(dm.dist(a, b) >= 3 for a in p[1:-1] for b in q[1:-1])
            assert all(dm.dist(a, b) >= 2 for a in (p[0], p[-1]) for b in (q[0], q[-1]))


# -- packing pairs ---------------------------------------------------------------

def test_weights_must_be_ordered():
    check_weights((4, 2, 1))
    for bad in [(2, 2, 1), (4, 1, 2), (2, 1.5, 1)]:
        with pytest.raises(PreconditionViolated):
            check_weights(bad)


def test_packing_pair_on_two_triangles(named):
    state = maximum_packing_pair(named["G3"], 0)
    pair = state.pair()
    assert pair.x == [0, 4] and pair.y == []
    assert pair.theta == 8 and pair.gamma == 0

    extension = packing_pair_search(named["G3"], 0)
    assert extension.phi == 0 and extension.dominated_cycle is None
    assert extension.xt == [0, 4]


def test_packing_pair_preconditions(named):
    with pytest.raises(PreconditionViolated):
        packing_pair_search(named["G11"], 0)
    with pytest.raises(PreconditionViolated):
        packing_pair_search(named["G3"], 2)


@pytest.mark.parametrize("constraint, i", [(THREE_ZERO, 0), (THREE_ONE, 1)])
def test_packing_pair_invariants(constraint, i, test_count):
    y_radius = 4 if i == 0 else 3
    for g in suite(constraint, test_count, sizes=(6, 30), seed=7):
        try:
            extension = packing_pair_search(g, i)
        except NoMoveApplies:
            continue
        pair = extension.pair
        assert pair.gamma == 0
        assert _packing(g, pair.x, 2) and _packing(g, pair.y, y_radius)
        members = set(pair.x) | set(pair.y)
        for triangle in enumerate_triangles(g):
            assert len(members.intersection(triangle.vertices)) == 1
        assert _packing(g, extension.xt, 2) and _packing(g, extension.yt, y_radius)
        assert set(pair.y) <= set(extension.yt)
        if extension.dominated_cycle is None:
            rest, _ = delete_vertices(g, set(extension.xt) | set(extension.yt))
            assert is_bipartite(rest)


# -- triangle transversals ---------------------------------------------------------

def _proper(h: Graph, colors) -> bool:
    return all(colors[u] != colors[v] for u, v in h.edges()) and set(colors) <= {0, 1, 2}


def test_brooks_3color():
    petersen, _ = from_networkx(nx.petersen_graph())
    for h in (cycle(5), cycle(6), petersen, star(4), triangle_theta(), build_graph(0, [])):
        assert _proper(h, brooks_3color(h))
    with pytest.raises(K4Component):
        brooks_3color(complete(4))


def test_triangle_clusters_and_cover():
    assert len(triangle_clusters(diamond())) == 1
    assert choose_transversal(diamond()) == [0]
    assert [len(c) for c in triangle_clusters(triangle_theta())] == [1, 1]


def test_transversal_of_short_gadget(named):
    g = named["k4_gadget_short"]
    tt = triangle_transversal(g)
    assert tt.t == [0, 5, 8, 10]
    dm = g.distances()
    expected = {(a, b) for a, b in itertools.combinations(tt.t, 2) if dm.dist(a, b) <= 3}
    assert set(tt.g3t_edges) == expected
    assert all(tt.coloring3[a] != tt.coloring3[b] for a, b in tt.g3t_edges)
    assert tt.x_reps == []


def _triangles_cover_threes(g: Graph) -> bool:
    on_triangle = {v for t in enumerate_triangles(g) for v in t.vertices}
    return all(v in on_triangle for v in range(g.n) if g.degree(v) == 3)


def test_transversal_degree_bounds(named, test_count):
    graphs = [named["k4_gadget_short"]] + suite(THREE_TWO, test_count, sizes=(8, 30), seed=33)
    for g in graphs:
        profile = classify(g)
        # the bounds rely on disjoint triangles covering every 3-vertex
        if profile.diamond is not None or not _triangles_cover_threes(g):
            continue
        try:
            tt = triangle_transversal(g)
        except (PreconditionViolated, K4Detected):
            continue
        degree = {v: 0 for v in tt.t}
        for a, b in tt.g3t_edges:
            degree[a] += 1
            degree[b] += 1
        heavy = set(profile.heavy)
        for v in tt.t:
            if g.degree(v) == 2:
                assert degree[v] <= 2
            elif v in heavy:
                assert degree[v] <= 4
            else:
                assert degree[v] <= 3


@pytest.mark.parametrize("t", [[0, 5, 8, 11], [0, 6, 9, 12]])
def test_k4_transversals_are_detected(named, t):
    with pytest.raises(K4Detected) as info:
        transversal_from(named["k4_gadget_short"], t)
    assert info.value.transversal == tuple(t)


def test_odd_cycle_representatives():
    two_c5 = build_graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 1) % 5) for i in range(5)])
    assert odd_cycle_reps(two_c5, range(10)) == [0, 5]
    assert odd_cycle_reps(cycle(6), range(6)) == []
    with pytest.raises(PreconditionViolated):
        odd_cycle_reps(star(3), range(4))
    with pytest.raises(NoTwoVertexOnOddCycle):
        odd_cycle_reps(complete(4), [0, 1, 2])
