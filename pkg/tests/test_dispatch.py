import pytest
from hypothesis import given, settings

from src.colorers.dispatch import (
    LinearColorer,
    auto_color,
    find_colorer,
    packing_number_bound,
    theorem_colorer,
)
from src.colorers.low_saturation import LowSaturationColorer
from src.errors import ExcludedGraph, NotColorable, OutOfClass, SolverTimeout
from src.graph.core import build_graph
from src.packing.coloring import make_sequence, verify

from .strategies import complete, cycle, path, subcubic_graphs


def test_cycle_goes_to_linear():
    result = auto_color(cycle(7), "1,2,2")
    assert result.colorer == "linear"
    assert str(result.sequence) == "1,2,2"
    assert not any(t.startswith("template:") for t in result.trace)


def test_weaker_sequence_uses_template():
    g = cycle(7)
    result = auto_color(g, "1,1,2")
    assert result.colorer == "linear"
    assert result.trace[0] == "template:1,1,3"
    assert str(result.sequence) == "1,1,2"
    assert verify(g, make_sequence("1,1,2"), result.coloring) == []


def test_find_colorer():
    colorer, template = find_colorer(cycle(7), make_sequence("1,2,2"))
    assert isinstance(colorer, LinearColorer)
    assert str(template) == "1,2,2"
    assert find_colorer(complete(4), make_sequence("1,2,3")) is None


def test_outside_every_template_uses_exact(named):
    result = auto_color(named["G11"], "1,1,2,2")
    assert result.colorer == "exact"
    assert verify(named["G11"], make_sequence("1,1,2,2"), result.coloring) == []


def test_single_class():
    assert auto_color(build_graph(1, []), "7").colorer == "exact"
    with pytest.raises(NotColorable):
        auto_color(path(3), "7")


def test_c5_has_no_122_coloring():
    with pytest.raises(NotColorable):
        auto_color(cycle(5), "1,2,2")


def test_excluded_graph(named):
    with pytest.raises(ExcludedGraph):
        auto_color(named["G1"], "2,2,2,2,3", method="constructive")
    with pytest.raises(NotColorable):
        auto_color(named["G1"], "2,2,2,2,3")


def test_methods():
    result = auto_color(cycle(7), "1,2,2", method="exact")
    assert result.colorer == "exact"
    assert result.trace[0].startswith("exact:nodes=")
    with pytest.raises(OutOfClass):
        auto_color(complete(4), "1,2,3", method="constructive")
    with pytest.raises(ValueError):
        auto_color(cycle(7), "1,2,2", method="greedy")


def test_timeout(named):
    with pytest.raises(SolverTimeout):
        auto_color(named["G11"], "1,1,3,3,3", method="exact", config={"node_budget": 1})


def test_packing_number_bound():
    bound, result = packing_number_bound(cycle(5))
    assert 4 <= bound <= 6
    assert result.colorer == "low-saturation"
    assert packing_number_bound(complete(4)) is None
    assert packing_number_bound(build_graph(0, [])) is None


def test_theorem_colorer():
    assert isinstance(theorem_colorer(cycle(7), "1,2,2"), LinearColorer)
    assert isinstance(theorem_colorer(cycle(7), "1,2,2,3"), LowSaturationColorer)
    assert theorem_colorer(cycle(7), "1,2,3") is None
    assert theorem_colorer(complete(4), "1,1,2") is None


@settings(max_examples=40, deadline=None)
@given(subcubic_graphs(max_n=9))
def test_auto_color_agrees_with_result(g):
    s = make_sequence("1,2,3,4,5,6")
    try:
        result = auto_color(g, s)
    except NotColorable:
        return
    assert verify(g, s, result.coloring) == []
    assert len(result.coloring) == g.n
