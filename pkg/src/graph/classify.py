"""Structural parameters: saturation levels, local girth profile, g3, claws, diamonds."""
import math
from itertools import combinations
from typing import Optional, Tuple

from ..data.schemas import ClassConstraint, ClassProfile
from ..errors import NotSubcubic
from .core import Graph, connected_components, enumerate_triangles, shortest_cycle_through


def classify(g: Graph) -> ClassProfile:
    """Compute the full class profile of a subcubic graph"""
    degrees = g.degrees()
    for v, d in enumerate(degrees):
        if d > 3:
            raise NotSubcubic(v, d)

    threes = [v for v in range(g.n) if degrees[v] == 3]
    saturation = max((sum(1 for w in g.adjacency[v] if degrees[w] == 3) for v in threes), default=0)

    heavy = [v for v in threes if all(degrees[w] == 3 for w in g.adjacency[v])]
    heavy_set = set(heavy)
    three_k = max((sum(1 for w in g.adjacency[v] if w in heavy_set) for v in heavy), default=0)

    girth = [shortest_cycle_through(g, v) for v in range(g.n)]
    # g3 = 0 without 3-vertices; one 3-vertex off every cycle makes it infinite
    g3 = max((girth[v] for v in threes), default=0)

    return ClassProfile(
        max_degree=max(degrees, default=0),
        min_degree=min(degrees, default=0),
        saturation=saturation,
        three_k=three_k,
        girth_profile=[float(x) for x in girth],
        g3=float(g3),
        had_three_vertex=bool(threes),
        claw_free=_claw_free(g),
        diamond=find_diamond(g),
        heavy=heavy,
        rich=rich_vertices(g),
        connected=len(connected_components(g)) <= 1,
    )


def _claw_free(g: Graph) -> bool:
    for v in range(g.n):
        if g.degree(v) == 3:
            a, b, c = g.adjacency[v]
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False
    return True


def rich_vertices(g: Graph) -> list:
    """3-vertices lying on two triangles"""
    count = [0] * g.n
    for triangle in enumerate_triangles(g):
        for v in triangle.vertices:
            count[v] += 1
    return [v for v in range(g.n) if g.degree(v) == 3 and count[v] >= 2]


def find_diamond(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """An induced diamond x1 x2 x3 x4 with chord x1x3, or None; K4 is not a diamond"""
    for x1, x3 in g.edges():
        common = [w for w in g.adjacency[x1] if w != x3 and g.has_edge(x3, w)]
        for x2, x4 in combinations(common, 2):
            if not g.has_edge(x2, x4):
                return (x1, x2, x3, x4)
    return None


def in_class(g: Graph, spec: ClassConstraint, profile: Optional[ClassProfile] = None) -> bool:
    """Conjunction of the constraint's bounds against the graph's profile"""
    if g.n == 0:
        return True
    if profile is None:
        if g.max_degree > 3:
            return False
        profile = classify(g)
    return profile_satisfies(profile, spec)


def profile_satisfies(profile: ClassProfile, spec: ClassConstraint) -> bool:
    if spec.max_degree_max is not None and profile.max_degree > spec.max_degree_max:
        return False
    if spec.saturation_max is not None and profile.saturation > spec.saturation_max:
        return False
    if spec.three_k_max is not None and profile.three_k > spec.three_k_max:
        return False
    # vacuous when there is no 3-vertex
    if profile.had_three_vertex:
        if spec.g3_max is not None and profile.g3 > spec.g3_max:
            return False
        if spec.g3_min is not None and profile.g3 < spec.g3_min:
            return False
    if spec.claw_free is not None and profile.claw_free != spec.claw_free:
        return False
    if spec.cubic is not None and (profile.min_degree == 3 and profile.max_degree == 3) != spec.cubic:
        return False
    if spec.diamond_free is not None and (profile.diamond is None) != spec.diamond_free:
        return False
    return True


def g3_label(value: float) -> str:
    if math.isinf(value):
        return "inf"
    return str(int(value))
