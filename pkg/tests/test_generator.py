import pytest

from src.colorers.low_saturation import ONE_SAT, ZERO_SAT
from src.colorers.three_saturated import THREE_ONE, THREE_TWO, THREE_ZERO
from src.colorers.two_saturated import TWO_SAT
from src.data.generator import generate, suite
from src.data.schemas import ClassConstraint, GenSpec
from src.errors import GenerationExhausted
from src.graph.classify import classify, in_class
from src.graph.core import connected_components

CLASSES = [
    ZERO_SAT,
    ONE_SAT,
    TWO_SAT,
    THREE_ZERO,
    THREE_ONE,
    THREE_TWO,
    ClassConstraint(saturation_max=1, g3_min=4, g3_max=4),
    ClassConstraint(saturation_max=2, g3_min=4),
]


@pytest.mark.parametrize("constraint", CLASSES, ids=lambda c: c.label())
def test_generated_graphs_are_in_class(constraint):
    for seed in range(8):
        spec = GenSpec(constraint=constraint, sizes=(8, 30), seed=seed)
        try:
            g = generate(spec)
        except GenerationExhausted:
            continue
        assert 8 <= g.n <= 30
        assert g.max_degree <= 3
        assert in_class(g, constraint)
        assert len(connected_components(g)) == 1


def test_deterministic_per_seed():
    spec = GenSpec(constraint=TWO_SAT, sizes=(10, 24), seed=42)
    assert generate(spec) == generate(spec)
    graphs = suite(TWO_SAT, 3, sizes=(10, 24), seed=42)
    assert graphs[0] == generate(spec)


def test_paths_and_cycles():
    constraint = ClassConstraint(max_degree_max=2)
    for seed in range(10):
        g = generate(GenSpec(constraint=constraint, sizes=(6, 15), seed=seed, connected=False))
        assert g.max_degree <= 2
        assert 6 <= g.n <= 15


def test_cubic_claw_free():
    constraint = ClassConstraint(cubic=True, claw_free=True)
    g = generate(GenSpec(constraint=constraint, sizes=(12, 30), seed=5))
    profile = classify(g)
    assert profile.min_degree == profile.max_degree == 3
    assert profile.claw_free
    assert g.n % 3 == 0


def test_cubic():
    g = generate(GenSpec(constraint=ClassConstraint(cubic=True), sizes=(10, 20), seed=1))
    assert g.n % 2 == 0 and min(g.degrees()) == 3 and g.max_degree == 3


def test_exhausted():
    # triangle blow-ups of cubic graphs start at 12 vertices
    spec = GenSpec(constraint=ClassConstraint(cubic=True, claw_free=True), sizes=(6, 9), max_attempts=5)
    with pytest.raises(GenerationExhausted):
        generate(spec)


@pytest.mark.parametrize("sizes", [(0, 5), (9, 4)])
def test_bad_sizes(sizes):
    with pytest.raises(ValueError):
        generate(GenSpec(sizes=sizes))
