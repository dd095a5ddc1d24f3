"""Shared builders and the instrumented monoid wrapper.

The wrapper boxes every value so that any label access outside the monoid's
identity/op/eq surface fails loudly; its call counts are compared against the
verifier's reported counters.
"""

from __future__ import annotations

import random

from diagcheck import (
    ADDITIVE,
    FREE,
    Diagram,
    OrientedGraph,
    build,
    matrix,
    matrix_monoid,
    matrix_unit,
    number,
    word,
    zero_matrix,
)


def kirchhoff_square() -> Diagram:
    """Voltage-drop square: 5 + 7 along the top equals 4 + 8 along the bottom."""
    graph = build(4, [(0, 1), (1, 3), (0, 2), (2, 3)])
    return Diagram(graph, ADDITIVE, [number(5), number(7), number(4), number(8)])


def triangle_graph() -> OrientedGraph:
    return build(3, [(0, 1), (1, 2), (0, 2)])


def rhomboid_square_graph() -> OrientedGraph:
    # Edge ids (a, b, c, d) = (0, 1, 2, 3).
    return build(4, [(0, 1), (1, 3), (0, 2), (2, 3)])


def fan_graph() -> OrientedGraph:
    """Three squares sharing the apex and the sink; any two of them conflict."""
    return build(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


MAT2_LABEL_POOL = (
    zero_matrix(2),
    matrix_monoid(2).identity(),
    matrix_unit(2, 0, 1),
    matrix_unit(2, 1, 0),
    matrix(((1, 1), (0, 1))),
)


def random_diagram(rng: random.Random, max_vertices: int = 5, max_edges: int = 6) -> Diagram:
    """Small random diagram; loops, parallel edges, and cycles all arise."""
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_edges)
    graph = OrientedGraph(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])
    family = rng.choice(("free", "matrix", "additive"))
    if family == "free":
        labels = [
            word(*(rng.randrange(3) for _ in range(rng.randint(0, 2))))
            for _ in range(m)
        ]
        return Diagram(graph, FREE, labels)
    if family == "matrix":
        labels = [rng.choice(MAT2_LABEL_POOL) for _ in range(m)]
        return Diagram(graph, matrix_monoid(2), labels)
    labels = [number(rng.randint(-2, 2)) for _ in range(m)]
    return Diagram(graph, ADDITIVE, labels)


class Boxed:
    """Opaque label container: every comparison outside the monoid explodes."""

    __slots__ = ("inner",)

    def __init__(self, inner):
        self.inner = inner

    def __eq__(self, other):
        raise AssertionError("label compared outside the monoid")

    __hash__ = None


class CountingMonoid:
    """Delegating monoid wrapper that boxes values and counts every call."""

    def __init__(self, inner):
        self.inner = inner
        self.identity_calls = 0
        self.op_calls = 0
        self.eq_calls = 0

    def identity(self):
        self.identity_calls += 1
        return Boxed(self.inner.identity())

    def op(self, a, b):
        self.op_calls += 1
        return Boxed(self.inner.op(a.inner, b.inner))

    def eq(self, a, b):
        self.eq_calls += 1
        return self.inner.eq(a.inner, b.inner)

    def owns(self, value):
        return isinstance(value, Boxed) and self.inner.owns(value.inner)


def boxed_diagram(diagram: Diagram) -> tuple[Diagram, CountingMonoid]:
    counting = CountingMonoid(diagram.monoid)
    boxed = Diagram(diagram.graph, counting, [Boxed(label) for label in diagram.labels])
    return boxed, counting
