import pytest

from src.colorers.linear import (
    L11K,
    L122,
    L1245K,
    L2222,
    PATH_122_ENDS_1,
    PATH_2222_EQUAL_ENDS,
    color_cycle,
    color_delta2,
    color_path,
    color_path_ends1,
    color_path_equal_ends,
    linear_order,
)
from src.errors import ExceptionalGraph, PreconditionViolated, TooShort
from src.graph.core import build_graph, connected_components
from src.packing.coloring import is_valid, make_sequence

from .strategies import cycle, path, star

SCHEMES = [L11K(3), L11K(7), L122, L2222, L1245K(6), L1245K(9)]


@pytest.mark.parametrize("scheme", SCHEMES, ids=lambda s: f"{s.kind.value}-{s.k}")
def test_every_cycle_is_colored(scheme):
    for n in range(3, 201):
        if n == 5 and scheme in (L122, L2222):
            continue
        assert is_valid(cycle(n), scheme.sequence, color_cycle(n, scheme)), n


@pytest.mark.parametrize("scheme", SCHEMES, ids=lambda s: f"{s.kind.value}-{s.k}")
def test_every_path_is_colored(scheme):
    for n in range(1, 120):
        assert is_valid(path(n), scheme.sequence, color_path(n, scheme)), n


@pytest.mark.parametrize("scheme", [L122, L2222])
def test_c5_is_the_exception(scheme):
    with pytest.raises(ExceptionalGraph) as info:
        color_cycle(5, scheme)
    assert info.value.name == "C5"


def test_l11k_uses_class_three_only_on_odd_cycles():
    assert 3 not in color_cycle(8, L11K(3)).assignment
    assert color_cycle(9, L11K(3)).assignment.count(3) == 1


def test_l1245k_needs_k_at_least_six():
    with pytest.raises(PreconditionViolated):
        L1245K(5)


def test_path_with_both_ends_in_class_one():
    s = make_sequence("1,2,2")
    for n in range(3, 80):
        c = color_path_ends1(n)
        assert c[0] == 1 and c[n - 1] == 1
        assert is_valid(path(n), s, c)
    with pytest.raises(TooShort):
        color_path_ends1(2)


def test_path_with_equal_ends():
    s = make_sequence("2,2,2,2")
    for n in range(4, 80):
        c = color_path_equal_ends(n)
        assert c[0] == c[n - 1] == 1
        assert 1 not in c.assignment[1:-1]
        assert is_valid(path(n), s, c)
    with pytest.raises(TooShort):
        color_path_equal_ends(3)


def test_path_schemes_on_short_paths():
    for n in range(1, 4):
        assert is_valid(path(n), make_sequence("1,2,2"), color_path(n, PATH_122_ENDS_1))
        assert is_valid(path(n), make_sequence("2,2,2,2"), color_path(n, PATH_2222_EQUAL_ENDS))


def test_linear_order_walks_paths_from_an_end():
    g = build_graph(5, [(3, 1), (1, 4), (4, 0), (0, 2)])
    order, is_cycle = linear_order(g, connected_components(g)[0])
    assert not is_cycle
    assert order == [2, 0, 4, 1, 3]
    order, is_cycle = linear_order(cycle(6), list(range(6)))
    assert is_cycle and order == [0, 1, 2, 3, 4, 5]


def test_delta2_colors_each_component():
    g = build_graph(12, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3), (7, 8), (8, 9), (9, 10)])
    c = color_delta2(g, L122)
    assert is_valid(g, make_sequence("1,2,2"), c)
    # isolated vertex 11 is a one-vertex path
    assert c[11] == 1


def test_delta2_class_map_moves_classes():
    c = color_delta2(cycle(7), L11K(3), {1: 1, 2: 2, 3: 4})
    assert set(c.assignment) == {1, 2, 4}
    assert is_valid(cycle(7), make_sequence("1,1,3,3"), c)


def test_delta2_rejects_degree_three():
    with pytest.raises(PreconditionViolated):
        color_delta2(star(3), L122)
