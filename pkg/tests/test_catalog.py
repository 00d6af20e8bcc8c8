import pytest

from src.data import catalog
from src.errors import UnknownName
from src.graph.classify import in_class
from src.graph.core import build_graph
from src.main import _narrow
from src.packing.coloring import is_valid, make_coloring, make_sequence
from src.solver.exact import decide, decide_all_small

FACTS = catalog.all_facts()


@pytest.mark.parametrize("name, fact", FACTS, ids=[f"{name}-{fact.sequence}" for name, fact in FACTS])
def test_fact_matches_exact_search(name, fact):
    g = catalog.get(name).graph()
    outcome = decide(g, fact.sequence)
    assert outcome.colorable == fact.colorable
    if g.n <= 7 and fact.sequence.k <= 5:
        assert decide_all_small(g, fact.sequence).colorable == fact.colorable


@pytest.mark.parametrize("name", [n for n in catalog.names() if catalog.get(n).witnesses])
def test_witnesses_verify(name):
    entry = catalog.get(name)
    g = entry.graph()
    for text, classes in entry.witnesses.items():
        s = make_sequence(text)
        assert len(classes) == g.n
        assert is_valid(g, s, make_coloring(classes)), text
        fact = catalog.fact_for(name, s)
        assert fact is not None and fact.colorable


def test_unknown_names():
    with pytest.raises(UnknownName):
        catalog.get("G99")
    with pytest.raises(UnknownName):
        catalog.get_conjecture("nope")


def test_find_isomorphic_under_relabeling():
    g1 = catalog.get("G1")
    shuffle = [3, 5, 0, 4, 1, 2]
    relabeled = build_graph(6, [(shuffle[u], shuffle[v]) for u, v in g1.edges])
    name, mapping = catalog.find_isomorphic(relabeled)
    assert name == "G1"
    for u, v in g1.edges:
        assert relabeled.has_edge(mapping[u], mapping[v])
    assert catalog.find_isomorphic(relabeled, ["C5", "G2"]) is None


def test_exception_coloring_moves_the_witness():
    # C5 walked in the order 0 2 4 1 3
    g = build_graph(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    s = make_sequence("1,2,2,3")
    name, coloring = catalog.exception_coloring(g, s)
    assert name == "C5"
    assert is_valid(g, s, coloring)
    # no witness stored for this sequence
    assert catalog.exception_coloring(g, make_sequence("1,1,3,3")) is None


def test_disproven_cells_name_witnesses_in_class():
    for cell in catalog.table_cells():
        for entry in cell.disproven:
            g = catalog.get(entry.witness).graph()
            assert in_class(g, _narrow(cell.constraint, entry.within)), (cell.row, cell.g3, entry.s)
            fact = catalog.fact_for(entry.witness, make_sequence(entry.sequence_text()))
            assert fact is not None and not fact.colorable


def test_table_entries_parse():
    cells = catalog.table_cells()
    assert cells[0].row == "0-saturated"
    excluded = [e for e in cells[0].proven if e.excluded]
    assert excluded[0].excluded == ["G1"]
    assert cells[0].proven[2].sequence_text() == "1,2,3,4,5,6"
    cited = [e for c in cells for e in c.proven if e.cited]
    assert {e.sequence_text() for e in cited} == {"1,1,2,2", "1,2,2,2,2,2"}


def test_conjectures_parse():
    conjectures = {c.name: c for c in catalog.conjectures()}
    assert conjectures["chi4-0sat"].chi_max == 4 and conjectures["chi4-0sat"].s is None
    assert conjectures["clawfree-11333"].excluded == ["G11"]
    assert conjectures["2sat-112"].constraint.saturation_max == 2
