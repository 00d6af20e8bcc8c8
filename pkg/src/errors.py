"""Exception hierarchy for the packing toolkit.

Every error carries an ``exit_code`` so the command line can map failures
to its stable exit-code contract without inspecting messages.
"""
from typing import Any, Optional, Sequence


class PackingError(Exception):
    """Base class for all toolkit errors"""

    exit_code = 1


# graph-core -----------------------------------------------------------------

class MalformedEdge(PackingError):
    exit_code = 4

    def __init__(self, u: Any, v: Any, reason: str):
        self.u = u
        self.v = v
        self.reason = reason
        super().__init__(f"malformed edge ({u}, {v}): {reason}")


class GraphParseError(PackingError):
    exit_code = 4

    def __init__(self, line_no: int, text: str, reason: str = "unparseable line"):
        self.line_no = line_no
        self.text = text
        super().__init__(f"line {line_no}: {reason}: {text!r}")


# classify -------------------------------------------------------------------

class NotSubcubic(PackingError):
    exit_code = 3

    def __init__(self, vertex: int, degree: int):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"vertex {vertex} has degree {degree} > 3")


# packing --------------------------------------------------------------------

class SequenceError(PackingError):
    exit_code = 4


class EmptySequence(SequenceError):
    def __init__(self):
        super().__init__("S-sequence is empty")


class NonPositive(SequenceError):
    def __init__(self, value: Any):
        self.value = value
        super().__init__(f"S-sequence entries must be positive integers, got {value!r}")


class NotNonDecreasing(SequenceError):
    def __init__(self, values: Sequence[int]):
        self.values = tuple(values)
        super().__init__(f"S-sequence must be non-decreasing, got {self.values}")


class IncompleteColoring(PackingError):
    exit_code = 4

    def __init__(self, expected: int, got: int, detail: str = ""):
        self.expected = expected
        self.got = got
        message = f"coloring covers {got} vertices, graph has {expected}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


# exact-solver ---------------------------------------------------------------

class SolverTimeout(PackingError):
    exit_code = 5

    def __init__(self, nodes: int, seconds: Optional[float] = None):
        self.nodes = nodes
        self.seconds = seconds
        super().__init__(f"search budget exhausted after {nodes} nodes")


class TooLarge(PackingError):
    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        super().__init__(f"exhaustive enumeration needs n <= 10 and k <= 6, got n={n}, k={k}")


# linear-colorer -------------------------------------------------------------

class ExceptionalGraph(PackingError):
    exit_code = 2

    def __init__(self, name: str, sequence: Optional[Sequence[int]] = None):
        self.name = name
        self.sequence = tuple(sequence) if sequence is not None else None
        super().__init__(f"{name} has no coloring under this scheme")


class TooShort(PackingError):
    def __init__(self, n: int, minimum: int):
        self.n = n
        self.minimum = minimum
        super().__init__(f"path of order {n} is shorter than required {minimum}")


# structure ------------------------------------------------------------------

class PreconditionViolated(PackingError):
    exit_code = 3

    def __init__(self, which: str):
        self.which = which
        super().__init__(f"precondition violated: {which}")


class InternalStructureError(PackingError):
    """A property guaranteed by construction failed at runtime"""

    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(detail)


class NoMoveApplies(InternalStructureError):
    def __init__(self, state: Any):
        self.state = state
        super().__init__(f"no improving move applies: {state}")


class K4Detected(PackingError):
    def __init__(self, transversal: Sequence[int]):
        self.transversal = tuple(transversal)
        super().__init__(f"transversal power graph is K4 on {self.transversal}")


class K4Component(PackingError):
    def __init__(self, vertices: Sequence[int]):
        self.vertices = tuple(vertices)
        super().__init__(f"component {self.vertices} is K4 and not 3-colorable")


class NoTwoVertexOnOddCycle(InternalStructureError):
    def __init__(self, cycle: Sequence[int]):
        self.cycle = tuple(cycle)
        super().__init__(f"odd cycle {self.cycle} has no 2-vertex")


# colorers -------------------------------------------------------------------

class OutOfClass(PackingError):
    exit_code = 3

    def __init__(self, constraint: Any, profile: Any = None):
        self.constraint = constraint
        self.profile = profile
        super().__init__(f"graph is outside class {constraint}")


class ExcludedGraph(PackingError):
    exit_code = 3

    def __init__(self, name: str, sequence: Sequence[int]):
        self.name = name
        self.sequence = tuple(sequence)
        super().__init__(f"{name} is excluded for S={self.sequence}")


class NotColorable(PackingError):
    exit_code = 2

    def __init__(self, sequence: Sequence[int]):
        self.sequence = tuple(sequence)
        super().__init__(f"graph is not {self.sequence}-packing colorable")


# catalog-gen ----------------------------------------------------------------

class UnknownName(PackingError):
    exit_code = 4

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown catalog graph {name!r}")


class GenerationExhausted(PackingError):
    def __init__(self, spec: Any, attempts: int):
        self.spec = spec
        self.attempts = attempts
        super().__init__(f"no graph satisfying {spec} after {attempts} attempts")
