"""S-sequences, colorings and the validity verifier."""
from typing import Iterable, List, Sequence, Union

import numpy as np

from ..data.schemas import PackingColoring, SSequence, Violation
from ..errors import EmptySequence, IncompleteColoring, NonPositive
from ..graph.core import Graph


def parse_sequence(text: str) -> SSequence:
    """Parse 's1,s2,...,sk' into a validated SSequence"""
    parts = [p.strip() for p in text.replace("(", "").replace(")", "").split(",")]
    parts = [p for p in parts if p]
    if not parts:
        raise EmptySequence()
    values = []
    for part in parts:
        try:
            value = int(part)
        except ValueError:
            raise NonPositive(part) from None
        values.append(value)
    return SSequence(values=tuple(values))


def make_sequence(values: Union[SSequence, Sequence[int], str]) -> SSequence:
    if isinstance(values, SSequence):
        return values
    if isinstance(values, str):
        return parse_sequence(values)
    return SSequence(values=tuple(values))


def make_coloring(assignment: Iterable[int]) -> PackingColoring:
    return PackingColoring(assignment=tuple(int(c) for c in assignment))


def verify(g: Graph, s: SSequence, c: PackingColoring) -> List[Violation]:
    """Every pair of same-class vertices at distance <= s_i; empty means valid"""
    if len(c.assignment) != g.n:
        raise IncompleteColoring(g.n, len(c.assignment))
    if any(cls > s.k for cls in c.assignment):
        bad = max(c.assignment)
        raise IncompleteColoring(g.n, len(c.assignment), f"class {bad} outside 1..{s.k}")

    dist = g.distances().matrix
    assignment = np.asarray(c.assignment, dtype=np.int64)
    violations = []
    for cls in range(1, s.k + 1):
        members = np.flatnonzero(assignment == cls)
        if members.size < 2:
            continue
        block = dist[np.ix_(members, members)]
        close = np.argwhere(np.triu((block >= 1) & (block <= s.value(cls)), k=1))
        for i, j in close:
            violations.append(
                Violation(cls=cls, u=int(members[i]), v=int(members[j]), distance=int(block[i, j]))
            )
    return violations


def is_valid(g: Graph, s: SSequence, c: PackingColoring) -> bool:
    return not verify(g, s, c)


def refines(s1: SSequence, s2: SSequence) -> bool:
    """Same length and s1 >= s2 pointwise, so s1-colorings are s2-colorings"""
    return s1.k == s2.k and all(a >= b for a, b in zip(s1.values, s2.values))
