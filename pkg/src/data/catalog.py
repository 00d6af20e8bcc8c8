"""Named graphs with their known colorability facts, loaded from catalog.yaml."""
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import yaml
from networkx.algorithms.isomorphism import GraphMatcher

from ..errors import UnknownName
from ..graph.core import Graph
from ..packing.coloring import make_coloring, make_sequence
from .schemas import CatalogFact, Conjecture, NamedGraph, PackingColoring, SSequence, TableCell

CATALOG_PATH = Path(__file__).with_name("catalog.yaml")
TABLE_PATH = Path(__file__).with_name("table.yaml")

# graphs a reduction may bottom out in, checked before recursing further
EXCEPTION_NAMES = ("C5", "G1", "G2", "G3")


@lru_cache(maxsize=1)
def _load(path: str = str(CATALOG_PATH)) -> Dict[str, NamedGraph]:
    with open(path, "r") as f:
        raw = yaml.safe_load(f)

    catalog: Dict[str, NamedGraph] = {}
    for name, entry in raw["graphs"].items():
        facts = [
            CatalogFact(sequence=make_sequence(fact["s"]), colorable=fact["colorable"], note=fact.get("note", ""))
            for fact in entry.get("facts", [])
        ]
        catalog[name] = NamedGraph(
            name=name,
            n=entry["n"],
            edges=[tuple(e) for e in entry["edges"]],
            description=entry.get("description", ""),
            expected_profile=entry.get("expected_profile", {}),
            facts=facts,
            witnesses={str(make_sequence(s)): list(c) for s, c in entry.get("witnesses", {}).items()},
        )
    return catalog


def names() -> List[str]:
    return list(_load().keys())


def get(name: str) -> NamedGraph:
    catalog = _load()
    if name not in catalog:
        raise UnknownName(name)
    return catalog[name]


def all_facts() -> List[Tuple[str, CatalogFact]]:
    return [(entry.name, fact) for entry in _load().values() for fact in entry.facts]


def fact_for(name: str, s: SSequence) -> Optional[CatalogFact]:
    for fact in get(name).facts:
        if fact.sequence == s:
            return fact
    return None


def _matcher(g: Graph, entry: NamedGraph) -> Optional[Dict[int, int]]:
    """Isomorphism catalog vertex -> g vertex, or None"""
    if g.n != entry.n or g.m != len(entry.edges):
        return None
    matcher = GraphMatcher(entry.graph().to_networkx(), g.to_networkx())
    if not matcher.is_isomorphic():
        return None
    return dict(matcher.mapping)


def find_isomorphic(g: Graph, candidates: Optional[List[str]] = None) -> Optional[Tuple[str, Dict[int, int]]]:
    """First catalog graph isomorphic to g, with the vertex mapping"""
    for name in candidates or names():
        mapping = _matcher(g, get(name))
        if mapping is not None:
            return name, mapping
    return None


def exception_coloring(g: Graph, s: SSequence,
                       candidates: Tuple[str, ...] = EXCEPTION_NAMES) -> Optional[Tuple[str, PackingColoring]]:
    """Stored witness moved onto g when g is a known exceptional graph.

    Returns (name, coloring); None when g matches nothing or the matching
    entry has no witness for s.
    """
    found = find_isomorphic(g, list(candidates))
    if found is None:
        return None
    name, mapping = found
    witness = get(name).witnesses.get(str(s))
    if witness is None:
        return None
    classes = [0] * g.n
    for catalog_vertex, graph_vertex in mapping.items():
        classes[graph_vertex] = witness[catalog_vertex]
    return name, make_coloring(classes)


@lru_cache(maxsize=1)
def _load_table(path: str = str(TABLE_PATH)) -> dict:
    with open(path, "r") as f:
        return yaml.safe_load(f)


def table_cells() -> List[TableCell]:
    """Result matrix cells in display order"""
    return [TableCell(**cell) for cell in _load_table()["cells"]]


def conjectures() -> List[Conjecture]:
    return [Conjecture(**entry) for entry in _load_table()["conjectures"]]


def get_conjecture(name: str) -> Conjecture:
    for conjecture in conjectures():
        if conjecture.name == name:
            return conjecture
    raise UnknownName(name)
