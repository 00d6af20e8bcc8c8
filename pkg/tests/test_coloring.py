import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from src.data.schemas import SSequence
from src.errors import EmptySequence, IncompleteColoring, NonPositive, NotNonDecreasing, SequenceError
from src.graph.core import Graph
from src.packing.coloring import is_valid, make_coloring, make_sequence, parse_sequence, refines, verify

from .strategies import complete, cycle, path, small_sequences, subcubic_graphs


def test_parse_sequence():
    assert parse_sequence("1,2,2,3").values == (1, 2, 2, 3)
    assert parse_sequence("(1, 1, 3)").values == (1, 1, 3)
    assert str(parse_sequence(" 2,2,2,2,3 ")) == "2,2,2,2,3"


@pytest.mark.parametrize("text, error", [
    ("", EmptySequence),
    ("()", EmptySequence),
    ("0,1", NonPositive),
    ("1,x", NonPositive),
    ("-2", NonPositive),
    ("2,1", NotNonDecreasing),
])
def test_parse_sequence_errors(text, error):
    with pytest.raises(error):
        parse_sequence(text)


def test_sequence_errors_are_packing_errors():
    with pytest.raises(SequenceError):
        SSequence(values=(3, 2))
    assert NotNonDecreasing.exit_code == 4


def test_sequence_helpers():
    s = make_sequence([1, 1, 3, 3, 3])
    assert s.k == 5
    assert s.value(3) == 3
    assert s.classes_with_value(3) == [3, 4, 5]
    assert make_sequence(s) is s
    assert make_sequence("1,2") == SSequence(values=(1, 2))


def test_coloring_is_one_based():
    with pytest.raises(ValidationError):
        make_coloring([0, 1])
    c = make_coloring([1, 2, 1])
    assert c.members(1) == [0, 2]
    assert len(c) == 3 and c[1] == 2


def test_verify_distance_rule():
    s = make_sequence("1,1")
    # class 1 on adjacent vertices breaks s_1 = 1
    assert not is_valid(cycle(4), s, make_coloring([1, 1, 2, 2]))
    assert is_valid(cycle(4), s, make_coloring([1, 2, 1, 2]))
    s2 = make_sequence("2,2,2")
    assert not is_valid(path(3), s2, make_coloring([1, 2, 1]))
    assert is_valid(path(4), s2, make_coloring([1, 2, 3, 1]))


def test_verify_reports_every_violation():
    violations = verify(complete(3), make_sequence("1"), make_coloring([1, 1, 1]))
    assert len(violations) == 3
    assert {(v.u, v.v) for v in violations} == {(0, 1), (0, 2), (1, 2)}
    assert all(v.cls == 1 and v.distance == 1 for v in violations)


def test_verify_rejects_incomplete_colorings():
    s = make_sequence("1,2")
    with pytest.raises(IncompleteColoring):
        verify(path(3), s, make_coloring([1, 2]))
    with pytest.raises(IncompleteColoring):
        verify(path(3), s, make_coloring([1, 2, 3]))


def test_refines():
    assert refines(make_sequence("1,2,3"), make_sequence("1,2,2"))
    assert refines(make_sequence("1,2,2"), make_sequence("1,2,2"))
    assert not refines(make_sequence("1,2,2"), make_sequence("1,2,3"))
    assert not refines(make_sequence("1,2,2,3"), make_sequence("1,2,2"))


@settings(max_examples=60, deadline=None)
@given(subcubic_graphs(max_n=8), small_sequences(max_k=3), st.data())
def test_verify_matches_pairwise_definition(g: Graph, s: SSequence, data):
    classes = data.draw(st.lists(st.integers(1, s.k), min_size=g.n, max_size=g.n))
    dm = g.distances()
    expected = {
        (u, v)
        for u, v in itertools.combinations(range(g.n), 2)
        if classes[u] == classes[v] and dm.dist(u, v) <= s.value(classes[u])
    }
    found = {(v.u, v.v) for v in verify(g, s, make_coloring(classes))}
    assert found == expected
