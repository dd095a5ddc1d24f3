"""Brute-force ground truth and witness validation.

The oracle enumerates every walk up to a length bound, groups walks by their
endpoint pair, and demands equal labels within each group.  With the bound
set to the vertex count it is exact: any longer walk contains a contiguous
simple cycle of at most |V| edges, which the comparison against the empty
walk at its base vertex already forces to the identity, so the walk's label
collapses to that of a walk within the bound.  The oracle is meant for small
instances and refuses (rather than truncates) work past its budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, label_of_sequence
from .errors import BudgetExceededError
from .graph import OrientedGraph, is_valid_path
from .verifier import MultiEdgeMismatch, NonIdentityLoop, PathMismatch

DEFAULT_WALK_BUDGET = 10**6


@dataclass
class WalkEnumeration:
    """All walks of length at most the bound, grouped by (origin, tail).

    Each group lists edge-id tuples in depth-first discovery order; the empty
    walk at vertex v appears first in group (v, v).
    """

    length_bound: int
    groups: dict

    @property
    def walk_count(self) -> int:
        return sum(len(walks) for walks in self.groups.values())


def enumerate_walks(graph: OrientedGraph, length_bound: int, budget: int = DEFAULT_WALK_BUDGET) -> WalkEnumeration:
    """Complete, duplicate-free walk enumeration up to the length bound."""
    if length_bound < 0:
        raise ValueError("length bound must be non-negative")
    groups: dict = {}
    count = 0
    for start in range(graph.vertex_count):
        stack = [((), start)]
        while stack:
            edges, at = stack.pop()
            count += 1
            if count > budget:
                raise BudgetExceededError(f"walk budget of {budget} exceeded")
            groups.setdefault((start, at), []).append(edges)
            if len(edges) < length_bound:
                for e in reversed(graph.adjacency[at]):
                    stack.append((edges + (e,), graph.tail(e)))
    return WalkEnumeration(length_bound, groups)


def oracle_verify(diagram: Diagram, length_bound: int, budget: int = DEFAULT_WALK_BUDGET) -> bool:
    """True iff all same-endpoint walks up to the bound have equal labels.

    Exact whenever length_bound >= |V|.  Labels are built incrementally (one
    product per walk extension) and each walk is compared against the first
    one seen for its endpoint pair.
    """
    if length_bound < 0:
        raise ValueError("length bound must be non-negative")
    graph = diagram.graph
    labels = diagram.labels
    mon = diagram.monoid
    reference: dict = {}
    count = 0
    for start in range(graph.vertex_count):
        stack = [(0, start, mon.identity())]
        while stack:
            length, at, value = stack.pop()
            count += 1
            if count > budget:
                raise BudgetExceededError(f"walk budget of {budget} exceeded")
            key = (start, at)
            if key in reference:
                if not mon.eq(value, reference[key]):
                    return False
            else:
                reference[key] = value
            if length < length_bound:
                for e in reversed(graph.adjacency[at]):
                    stack.append((length + 1, graph.tail(e), mon.op(value, labels[e])))
    return True


def _require_edge(graph: OrientedGraph, edge) -> None:
    if not isinstance(edge, int) or isinstance(edge, bool) or not 0 <= edge < graph.edge_count:
        raise ValueError(f"witness refers to invalid edge id {edge!r}")


def validate_witness(diagram: Diagram, witness) -> bool:
    """Re-evaluate a witness on the original diagram.

    Semantically wrong witnesses (a non-loop in NonIdentityLoop, mismatched
    path endpoints, equal labels) return False; structurally malformed ones
    (unknown type, out-of-range edge ids) raise.
    """
    graph = diagram.graph
    mon = diagram.monoid
    if isinstance(witness, NonIdentityLoop):
        _require_edge(graph, witness.edge)
        if not graph.is_loop(witness.edge):
            return False
        return not mon.eq(diagram.labels[witness.edge], mon.identity())
    if isinstance(witness, MultiEdgeMismatch):
        _require_edge(graph, witness.edge)
        _require_edge(graph, witness.kept)
        e, kept = witness.edge, witness.kept
        if e == kept or graph.is_loop(e):
            return False
        if graph.origin(e) != graph.origin(kept) or graph.tail(e) != graph.tail(kept):
            return False
        return not mon.eq(diagram.labels[e], diagram.labels[kept])
    if isinstance(witness, PathMismatch):
        for path in (witness.path1, witness.path2):
            for e in path.edges:
                _require_edge(graph, e)
        if not is_valid_path(graph, witness.path1) or not is_valid_path(graph, witness.path2):
            return False
        if witness.path1.origin != witness.path2.origin or witness.path1.tail != witness.path2.tail:
            return False
        return not mon.eq(
            label_of_sequence(diagram, witness.path1.edges),
            label_of_sequence(diagram, witness.path2.edges),
        )
    raise TypeError(f"not a witness: {type(witness).__name__}")
