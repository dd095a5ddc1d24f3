"""Hard labelings used as fixtures.

The commutative ones look degenerate (almost everything maps to an absorbing
zero) yet satisfy every relation; the non-commutative ones satisfy every
relation except a single targeted one.  Matrix families: products of the
units used here vanish after at most three factors, which is exactly what
makes the commutative fixtures work.
"""

from __future__ import annotations

from .constructions import Rhomboid, is_rhomboid
from .diagram import Diagram
from .graph import (
    OrientedGraph,
    has_multiple_edges,
    has_triangle,
    is_2_path_bounded,
    is_quasi_acyclic,
    loop_count,
)
from .monoid import matrix_monoid, matrix_unit, upper_unitriangular, zero_matrix


class LabelingPreconditionError(ValueError):
    """The input graph fails a structural precondition; names the predicate."""


def _require(condition: bool, predicate: str) -> None:
    if not condition:
        raise LabelingPreconditionError(f"precondition failed: graph is not {predicate}")


def _check_vanishing_shape(graph: OrientedGraph) -> None:
    _require(loop_count(graph) == 0, "loop-free")
    _require(not has_multiple_edges(graph), "multi-edge-free")
    _require(not has_triangle(graph), "triangle-free")
    _require(is_quasi_acyclic(graph), "quasi-acyclic")
    _require(is_2_path_bounded(graph), "2-path-bounded")


def _require_edge(graph: OrientedGraph, edge) -> None:
    if not isinstance(edge, int) or isinstance(edge, bool) or not 0 <= edge < graph.edge_count:
        raise ValueError(f"invalid edge id {edge!r}")


def nz_edge_labeling(graph: OrientedGraph, edge: int) -> Diagram:
    """Commutative 2x2 diagram whose only nonzero label sits on one edge."""
    _check_vanishing_shape(graph)
    _require_edge(graph, edge)
    nonzero = matrix_unit(2, 0, 1)
    zero = zero_matrix(2)
    labels = [nonzero if e == edge else zero for e in range(graph.edge_count)]
    return Diagram(graph, matrix_monoid(2), labels)


def nz_pair_labeling(graph: OrientedGraph, first: int, second: int) -> Diagram:
    """Commutative 3x3 diagram where the two chosen labels multiply to a
    nonzero matrix.

    Consecutive pair (t(first) = o(second)): every edge leaving o(first) gets
    the low unit, every edge entering t(second) gets the high unit; triangle
    freedom keeps the two cases from colliding.  Otherwise only the two
    chosen edges are nonzero.
    """
    _check_vanishing_shape(graph)
    _require_edge(graph, first)
    _require_edge(graph, second)
    if first == second:
        raise ValueError("the two edges must be distinct")
    low = matrix_unit(3, 0, 1)
    high = matrix_unit(3, 1, 2)
    zero = zero_matrix(3)
    if graph.tail(first) == graph.origin(second):
        start = graph.origin(first)
        end = graph.tail(second)
        labels = []
        for e in range(graph.edge_count):
            if graph.origin(e) == start:
                labels.append(low)
            elif graph.tail(e) == end:
                labels.append(high)
            else:
                labels.append(zero)
    else:
        labels = [
            low if e == first else high if e == second else zero
            for e in range(graph.edge_count)
        ]
    return Diagram(graph, matrix_monoid(3), labels)


def rhomboid_gap_labeling(graph: OrientedGraph, rhomboid: Rhomboid) -> Diagram:
    """Non-commutative 3x3 diagram violating exactly one relation: the two
    sides of the given rhomboid."""
    if not is_rhomboid(graph, *rhomboid):
        raise ValueError("edges do not form a rhomboid")
    low = matrix_unit(3, 0, 1)
    high = matrix_unit(3, 1, 2)
    zero = zero_matrix(3)
    labels = [
        low if e == rhomboid.a else high if e == rhomboid.b else zero
        for e in range(graph.edge_count)
    ]
    return Diagram(graph, matrix_monoid(3), labels)


def loop_indicator_labeling(graph: OrientedGraph) -> Diagram:
    """Multiplicative 0/1 diagram (1x1 matrices): loops get 1, everything
    else 0; commutative because no directed cycle leaves its vertex."""
    _require(is_quasi_acyclic(graph), "quasi-acyclic")
    mon = matrix_monoid(1)
    one = mon.identity()
    zero = zero_matrix(1)
    labels = [one if graph.is_loop(e) else zero for e in range(graph.edge_count)]
    return Diagram(graph, mon, labels)


def loop_kernel_labeling(graph: OrientedGraph, values) -> Diagram:
    """2x2 diagram with unitriangular loop labels [[1, v], [0, 1]] (one v per
    loop, in edge-id order) and the zero matrix elsewhere.

    Non-commutative iff some v is nonzero: that loop's label differs from
    the identity, no matter how the loop labels multiply out together.
    """
    loops = [e for e in range(graph.edge_count) if graph.is_loop(e)]
    if not loops:
        raise ValueError("graph has no loops")
    values = list(values)
    if len(values) != len(loops):
        raise ValueError(f"expected {len(loops)} kernel entries, got {len(values)}")
    by_loop = dict(zip(loops, values))
    zero = zero_matrix(2)
    labels = [
        upper_unitriangular(by_loop[e]) if e in by_loop else zero
        for e in range(graph.edge_count)
    ]
    return Diagram(graph, matrix_monoid(2), labels)
