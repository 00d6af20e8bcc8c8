"""Closed-form colorings of paths and cycles.

Cycle tables are kept as token strings so each case can be read side by side
with its hand derivation.  Tokens map to class positions per scheme.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from ..data.schemas import PackingColoring, SSequence
from ..errors import ExceptionalGraph, InternalStructureError, PreconditionViolated, TooShort
from ..graph.core import Graph, connected_components
from ..packing.coloring import make_coloring


class SchemeKind(str, Enum):
    L11K = "L11K"
    L122 = "L122"
    L2222 = "L2222"
    L1245K = "L1245K"
    PATH_122_ENDS_1 = "Path122Ends1"
    PATH_2222_EQUAL_ENDS = "Path2222EqualEnds"


@dataclass(frozen=True)
class LinearScheme:
    kind: SchemeKind
    k: Optional[int] = None

    @property
    def sequence(self) -> SSequence:
        if self.kind == SchemeKind.L11K:
            return SSequence(values=(1, 1, self.k))
        if self.kind == SchemeKind.L1245K:
            return SSequence(values=(1, 2, 4, 5, self.k))
        if self.kind in (SchemeKind.L122, SchemeKind.PATH_122_ENDS_1):
            return SSequence(values=(1, 2, 2))
        return SSequence(values=(2, 2, 2, 2))


def L11K(k: int) -> LinearScheme:
    return LinearScheme(SchemeKind.L11K, k)


def L1245K(k: int) -> LinearScheme:
    if k < 6:
        raise PreconditionViolated(f"L1245K needs k >= 6, got {k}")
    return LinearScheme(SchemeKind.L1245K, k)


L122 = LinearScheme(SchemeKind.L122)
L2222 = LinearScheme(SchemeKind.L2222)
PATH_122_ENDS_1 = LinearScheme(SchemeKind.PATH_122_ENDS_1)
PATH_2222_EQUAL_ENDS = LinearScheme(SchemeKind.PATH_2222_EQUAL_ENDS)


TOKENS_122 = {"1": 1, "2a": 2, "2b": 3}
TOKENS_1245 = {"1": 1, "2": 2, "4": 3, "5": 4, "k": 5}

# (1,2,2) on C_n, by n mod 12: (prefix, repeated block)
CYCLE_122 = {
    0: ("", "1 2a 2b"),
    3: ("", "1 2a 2b"),
    6: ("", "1 2a 2b"),
    9: ("", "1 2a 2b"),
    1: ("1 2a 1 2b", "1 2a 2b"),
    4: ("1 2a 1 2b", "1 2a 2b"),
    7: ("1 2a 1 2b", "1 2a 2b"),
    10: ("1 2a 1 2b", "1 2a 2b"),
    2: ("2a 1 2b 2a 1 2b", "1 2a 1 2b"),
    8: ("", "1 2a 1 2b"),
    11: ("1 2a 2b", "1 2a 1 2b"),
    5: ("2b 1 2a 1 2b 1 2a 2b 1 2a 2b 1 2a 2b 1 2a 1",
        "2b 1 2a 1 2b 1 2a 1 2b 1 2a 1"),
}

PERIOD_1245 = "1 2 1 4 1 2 1 5"

# (1,2,4,5,k) on C_n: tail appended after the periodic part, by (n mod 4, m odd)
CYCLE_1245_TAIL = {
    (0, False): "",
    (0, True): "1 2 1 k",
    (1, False): "1 2 1 4 1 5 2 1 k",
    (1, True): "1 2 1 5 1 4 2 1 k",
    (2, False): "1 2 1 4 1 5 1 2 1 k",
    (2, True): "1 2 1 5 1 4 1 2 1 5",
    (3, False): "1 2 1 4 1 5 1 2 4 1 k",
    (3, True): "1 2 1 5 1 4 1 2 k 1 5",
}

# orders too short to hold their tail
CYCLE_1245_SMALL = {
    3: "1 2 k",
    5: "1 2 1 4 k",
    6: "1 2 1 4 1 5",
    7: "1 2 1 4 1 5 k",
}


def _tokens(text: str) -> List[str]:
    return text.split()


def _cyclic_ok(classes: Sequence[int], values: Sequence[int], closed: bool) -> bool:
    """Packing check along a cycle (closed) or path by scanning forward windows"""
    n = len(classes)
    for i, c in enumerate(classes):
        reach = min(values[c - 1], n - 1)
        for step in range(1, reach + 1):
            j = i + step
            if j >= n:
                if not closed:
                    break
                j -= n
            if classes[j] == c:
                return False
    return True


def _expand_122(n: int) -> List[str]:
    m, r = divmod(n, 12)
    prefix, block = CYCLE_122[r]
    out = _tokens(prefix)
    block_tokens = _tokens(block)
    while len(out) < n:
        out.extend(block_tokens)
    if len(out) != n:
        raise InternalStructureError(f"(1,2,2) table does not tile C_{n}")
    return out


def _recolor_ones(classes: List[int]) -> List[int]:
    """(1,2,2) -> (2,2,2,2): class-1 vertices split over two fresh value-2 classes"""
    n = len(classes)
    # 2a, 2b become positions 1, 2; the former 1s take 3 or 4
    out = [{2: 1, 3: 2}.get(c, c) for c in classes]
    ones = [i for i, c in enumerate(classes) if c == 1]
    if not ones:
        return out
    t = len(ones)
    gaps = [(ones[(i + 1) % t] - ones[i]) % n or n for i in range(t)]
    # start right after a gap of 3 or more when there is one
    start = next((i for i in range(t) if gaps[i - 1] >= 3), 0)
    label = 3
    for step in range(t):
        i = (start + step) % t
        out[ones[i]] = label
        label = 7 - label if gaps[i] < 3 else 3
    last = (start - 1) % t
    if t > 1 and gaps[last] < 3 and out[ones[last]] == out[ones[start]]:
        raise InternalStructureError(f"cannot split class 1 on C_{n}")
    return out


def color_cycle(n: int, scheme: LinearScheme) -> PackingColoring:
    """Coloring of C_n (vertices in cycle order) under the scheme's sequence"""
    if n < 3:
        raise PreconditionViolated(f"cycle order must be >= 3, got {n}")
    kind = scheme.kind
    if kind in (SchemeKind.PATH_122_ENDS_1, SchemeKind.PATH_2222_EQUAL_ENDS):
        kind = SchemeKind.L122 if kind == SchemeKind.PATH_122_ENDS_1 else SchemeKind.L2222

    if kind == SchemeKind.L11K:
        classes = [1 + (i % 2) for i in range(n)]
        if n % 2:
            classes[-1] = 3
    elif kind in (SchemeKind.L122, SchemeKind.L2222):
        if n == 5:
            raise ExceptionalGraph("C5", scheme.sequence.values)
        classes = [TOKENS_122[t] for t in _expand_122(n)]
        if kind == SchemeKind.L2222:
            classes = _recolor_ones(classes)
    elif kind == SchemeKind.L1245K:
        classes = [TOKENS_1245[t] for t in _expand_1245(n)]
    else:
        raise PreconditionViolated(f"unknown scheme {scheme}")

    values = LinearScheme(kind, scheme.k).sequence.values
    if not _cyclic_ok(classes, values, closed=True):
        raise InternalStructureError(f"{kind.value} table invalid on C_{n}")
    return make_coloring(classes)


def _expand_1245(n: int) -> List[str]:
    if n in CYCLE_1245_SMALL:
        return _tokens(CYCLE_1245_SMALL[n])
    m, r = divmod(n, 4)
    tail = _tokens(CYCLE_1245_TAIL[(r, m % 2 == 1)])
    period = _tokens(PERIOD_1245)
    body_len = n - len(tail)
    body = [period[i % len(period)] for i in range(body_len)]
    return body + tail


def color_path_ends1(n: int) -> PackingColoring:
    """(1,2,2)-coloring of P_n with both ends in class 1"""
    if n < 3:
        raise TooShort(n, 3)
    blocks, rest = divmod(n - 1, 3)
    tokens: List[str] = []
    if rest == 1:
        # n-1 = 3(blocks-1) + 2 + 2
        blocks -= 1
        tail = ["1", "2a", "1", "2b"]
    elif rest == 2:
        tail = ["1", "2a"]
    else:
        tail = []
    for _ in range(blocks):
        tokens.extend(["1", "2a", "2b"])
    tokens.extend(tail)
    tokens.append("1")
    classes = [TOKENS_122[t] for t in tokens]
    if len(classes) != n or not _cyclic_ok(classes, (1, 2, 2), closed=False):
        raise InternalStructureError(f"path (1,2,2) construction failed for n={n}")
    return make_coloring(classes)


def color_path_equal_ends(n: int) -> PackingColoring:
    """(2,2,2,2)-coloring of P_n; ends share class 1, interior avoids it"""
    if n < 4:
        raise TooShort(n, 4)
    classes = [1] + [2 + (i % 3) for i in range(n - 2)] + [1]
    if not _cyclic_ok(classes, (2, 2, 2, 2), closed=False):
        raise InternalStructureError(f"path (2,2,2,2) construction failed for n={n}")
    return make_coloring(classes)


def color_path(n: int, scheme: LinearScheme) -> PackingColoring:
    """Path restriction of a cycle scheme"""
    if n <= 0:
        return make_coloring([])
    kind = scheme.kind
    if kind == SchemeKind.PATH_122_ENDS_1:
        return color_path_ends1(n) if n >= 3 else make_coloring([1, 2][:n])
    if kind == SchemeKind.PATH_2222_EQUAL_ENDS:
        return color_path_equal_ends(n) if n >= 4 else make_coloring([1, 2, 3][:n])
    if kind == SchemeKind.L11K:
        return make_coloring(1 + (i % 2) for i in range(n))
    if kind == SchemeKind.L122:
        return make_coloring([1, 2, 3][i % 3] for i in range(n))
    if kind == SchemeKind.L2222:
        return make_coloring([1, 2, 3][i % 3] for i in range(n))
    if n < 3:
        return make_coloring([1, 2][:n])
    # truncated cycle: path distances only grow
    classes = list(color_cycle(n, scheme).assignment)
    if not _cyclic_ok(classes, scheme.sequence.values, closed=False):
        raise InternalStructureError(f"truncated {kind.value} invalid on P_{n}")
    return make_coloring(classes)


def linear_order(g: Graph, component: Sequence[int]) -> Tuple[List[int], bool]:
    """Vertices of a path/cycle component in walking order, and whether it is a cycle"""
    if len(component) == 1:
        return [component[0]], False
    ends = [v for v in component if g.degree(v) == 1]
    is_cycle = not ends
    start = min(ends) if ends else min(component)
    order = [start]
    prev, cur = None, start
    while len(order) < len(component):
        # adjacency is sorted, so a cycle is walked toward its smaller neighbour
        step = next(w for w in g.adjacency[cur] if w != prev)
        prev, cur = cur, step
        order.append(cur)
    return order, is_cycle


def color_delta2(g: Graph, scheme: LinearScheme,
                 class_map: Optional[Dict[int, int]] = None) -> PackingColoring:
    """Per-component coloring of a graph whose components are paths and cycles.

    ``class_map`` sends scheme classes to positions of a longer sequence.
    """
    if g.max_degree > 2:
        raise PreconditionViolated("color_delta2 needs max degree <= 2")
    classes = [0] * g.n
    for component in connected_components(g):
        order, is_cycle = linear_order(g, component)
        if is_cycle:
            part = color_cycle(len(order), scheme)
        else:
            part = color_path(len(order), scheme)
        for v, c in zip(order, part.assignment):
            classes[v] = class_map[c] if class_map else c
    return make_coloring(classes)
