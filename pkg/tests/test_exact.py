import pytest
from hypothesis import given, settings

from src.data.schemas import SolveConfig, SSequence
from src.errors import SolverTimeout, TooLarge
from src.graph.core import Graph
from src.packing.coloring import is_valid, make_sequence
from src.solver.exact import (
    complete_coloring,
    decide,
    decide_all_small,
    decide_or_raise,
    packing_chromatic_number,
    search_order,
)

from .strategies import complete, cycle, path, small_sequences, subcubic_graphs, table_sequences


@settings(max_examples=80, deadline=None)
@given(subcubic_graphs(max_n=8), small_sequences(max_k=4))
def test_search_agrees_with_enumeration(g: Graph, s: SSequence):
    fast = decide(g, s)
    slow = decide_all_small(g, s)
    assert fast.status == slow.status
    if fast.colorable:
        assert is_valid(g, s, fast.coloring)
        assert is_valid(g, s, slow.coloring)


@settings(max_examples=40, deadline=None)
@given(subcubic_graphs(max_n=9, connected=True), table_sequences())
def test_table_sequences_agree_with_enumeration(g: Graph, s: SSequence):
    if s.k ** g.n > 300_000:
        return
    assert decide(g, s).status == decide_all_small(g, s).status


def test_search_without_symmetry_breaking_agrees():
    cfg = SolveConfig(symmetry_breaking=False)
    for n in range(3, 9):
        for text in ("1,2,2", "2,2,2,2", "1,1,3"):
            s = make_sequence(text)
            assert decide(cycle(n), s, cfg).status == decide(cycle(n), s).status


def test_known_cycle_answers():
    assert not decide(cycle(5), make_sequence("1,2,2")).colorable
    assert not decide(cycle(5), make_sequence("2,2,2,2")).colorable
    assert decide(cycle(5), make_sequence("1,2,2,3")).colorable
    assert decide(cycle(7), make_sequence("1,2,2")).colorable


def test_empty_graph_is_colorable():
    from src.graph.core import build_graph
    outcome = decide(build_graph(0, []), make_sequence("1"))
    assert outcome.colorable and outcome.coloring.assignment == ()


def test_budget_exhaustion(named):
    cfg = SolveConfig(node_budget=1)
    outcome = decide(named["G11"], make_sequence("1,1,3,3,3"), cfg)
    assert outcome.status == "timeout"
    with pytest.raises(SolverTimeout):
        decide_or_raise(named["G11"], make_sequence("1,1,3,3,3"), cfg)


def test_enumeration_size_guard():
    with pytest.raises(TooLarge):
        decide_all_small(path(11), make_sequence("1,2"))
    with pytest.raises(TooLarge):
        decide_all_small(path(3), make_sequence("1,2,3,4,5,6,7"))


def test_enumeration_witness_is_lexicographically_least():
    outcome = decide_all_small(path(4), make_sequence("1,2,3"))
    assert outcome.coloring.assignment == (1, 2, 1, 3)


@pytest.mark.parametrize("g, expected", [
    (path(1), 1),
    (path(3), 2),
    (path(4), 3),
    (cycle(4), 3),
    (cycle(5), 4),
    (complete(4), 4),
])
def test_packing_chromatic_number(g, expected):
    assert packing_chromatic_number(g) == expected


def test_complete_coloring_respects_fixed_classes():
    s = make_sequence("1,2,2")
    c = complete_coloring(cycle(6), s, {0: 2, 3: 2})
    assert c is not None and is_valid(cycle(6), s, c)
    assert c[0] == c[3] == 2
    # antipodal vertices of C6 always share a value-2 class
    assert complete_coloring(cycle(6), s, {0: 2, 3: 3}) is None
    # class 1 on two adjacent vertices can never be completed
    assert complete_coloring(cycle(6), s, {0: 1, 1: 1}) is None


def test_search_order_covers_components_largest_first():
    from src.graph.core import build_graph
    g = build_graph(6, [(0, 1), (2, 3), (3, 4), (4, 5)])
    order = search_order(g)
    assert sorted(order) == list(range(6))
    assert order[:4] == [2, 3, 4, 5]


@pytest.mark.slow
def test_parallel_branches_agree(named):
    cfg = SolveConfig(workers=2)
    for name, text in (("G10", "1,2,2,3"), ("G10", "1,1,2"), ("G11", "1,1,2,2")):
        s = make_sequence(text)
        assert decide(named[name], s, cfg).status == decide(named[name], s).status
