"""The core verification pass with exact operation accounting.

The pass runs three phases on a private working copy of the diagram:

1. every loop edge is checked against the identity and removed;
2. for each origin, the first edge to each tail is kept and every further
   parallel edge is checked against it and removed;
3. from every vertex in ascending id order, a depth-first search propagates
   a product m(v) along tree edges and checks every non-tree edge, with
   visited marks and m-values reset per root.

Labels are touched only through the monoid's ``identity``/``op``/``eq``; every
``op`` and ``eq`` call is counted, and the counters are the report.  The pass
stops at the first violation and returns a witness for it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .diagram import Diagram
from .graph import Path


@dataclass
class Counters:
    """Exact per-phase operation counts."""

    eq_loops: int = 0
    eq_multi: int = 0
    eq_dfs: int = 0
    mult_dfs: int = 0

    @property
    def eq_total(self) -> int:
        return self.eq_loops + self.eq_multi + self.eq_dfs

    @property
    def mult_total(self) -> int:
        return self.mult_dfs


@dataclass
class RelationTrace:
    """Every equality check and concatenation performed, as edge-sequence pairs.

    Each relation mirrors the operands of one ``eq`` call; each product mirrors
    one ``op`` call.  Together they form a relation system whose verification
    is exactly what the run did.
    """

    relations: list = field(default_factory=list)
    products: list = field(default_factory=list)


@dataclass(frozen=True)
class NonIdentityLoop:
    edge: int


@dataclass(frozen=True)
class MultiEdgeMismatch:
    edge: int
    kept: int


@dataclass(frozen=True)
class PathMismatch:
    path1: Path
    path2: Path


def witness_to_dict(witness) -> dict:
    if isinstance(witness, NonIdentityLoop):
        return {"kind": "non_identity_loop", "edge": witness.edge}
    if isinstance(witness, MultiEdgeMismatch):
        return {"kind": "multi_edge_mismatch", "edge": witness.edge, "kept": witness.kept}
    if isinstance(witness, PathMismatch):
        return {
            "kind": "path_mismatch",
            "path1": _path_to_dict(witness.path1),
            "path2": _path_to_dict(witness.path2),
        }
    raise TypeError(f"not a witness: {type(witness).__name__}")


def _path_to_dict(path: Path) -> dict:
    return {"edges": list(path.edges), "origin": path.origin, "tail": path.tail}


def trace_to_dict(trace: RelationTrace) -> dict:
    return {
        "relations": [[list(lhs), list(rhs)] for lhs, rhs in trace.relations],
        "products": [[list(lhs), list(rhs)] for lhs, rhs in trace.products],
    }


@dataclass
class VerificationReport:
    commutative: bool
    counters: Counters
    reduced_edges: int
    witness: object | None = None
    trace: RelationTrace | None = None

    @property
    def eq_total(self) -> int:
        return self.counters.eq_total

    @property
    def mult_total(self) -> int:
        return self.counters.mult_total

    def to_dict(self) -> dict:
        return {
            "commutative": self.commutative,
            "counters": {
                "eq_loops": self.counters.eq_loops,
                "eq_multi": self.counters.eq_multi,
                "eq_dfs": self.counters.eq_dfs,
                "mult_dfs": self.counters.mult_dfs,
                "reduced_edges": self.reduced_edges,
            },
            "witness": witness_to_dict(self.witness) if self.witness is not None else None,
            "trace": trace_to_dict(self.trace) if self.trace is not None else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


class WorkingDiagram:
    """Mutable adjacency copy the reduction phases edit; the source diagram
    and its graph are never touched."""

    def __init__(self, diagram: Diagram):
        self.diagram = diagram
        self.adjacency = [list(out) for out in diagram.graph.adjacency]

    def remaining_edge_count(self) -> int:
        return sum(len(out) for out in self.adjacency)


def remove_loops(working: WorkingDiagram, counters: Counters, trace: RelationTrace | None = None):
    """Check every loop against the identity and drop it; first failure wins."""
    diagram = working.diagram
    graph = diagram.graph
    labels = diagram.labels
    mon = diagram.monoid
    one = mon.identity()
    for v in range(graph.vertex_count):
        out = working.adjacency[v]
        kept = []
        for pos, e in enumerate(out):
            if graph.tail(e) == v:
                counters.eq_loops += 1
                if trace is not None:
                    trace.relations.append(((e,), ()))
                if not mon.eq(labels[e], one):
                    working.adjacency[v] = kept + out[pos:]
                    return NonIdentityLoop(e)
            else:
                kept.append(e)
        working.adjacency[v] = kept
    return None


def remove_multiple_edges(working: WorkingDiagram, counters: Counters, trace: RelationTrace | None = None):
    """Keep the first edge per (origin, tail), check and drop the rest.

    One timestamped scratch table is reused across origins, so the whole
    phase is linear in vertices plus edges.  Assumes loops are already gone.
    """
    diagram = working.diagram
    graph = diagram.graph
    labels = diagram.labels
    mon = diagram.monoid
    n = graph.vertex_count
    stamp = [-1] * n
    kept_label = [None] * n
    kept_edge = [0] * n
    for v in range(n):
        out = working.adjacency[v]
        kept = []
        for pos, e in enumerate(out):
            u = graph.tail(e)
            if stamp[u] != v:
                stamp[u] = v
                kept_label[u] = labels[e]
                kept_edge[u] = e
                kept.append(e)
            else:
                counters.eq_multi += 1
                if trace is not None:
                    trace.relations.append(((e,), (kept_edge[u],)))
                if not mon.eq(labels[e], kept_label[u]):
                    working.adjacency[v] = kept + out[pos:]
                    return MultiEdgeMismatch(e, kept_edge[u])
        working.adjacency[v] = kept
    return None


class _DfsScratch:
    """Per-verify arrays; stamps make per-root resets O(1)."""

    def __init__(self, n: int, tracing: bool):
        self.visited = [-1] * n
        self.m_value = [None] * n
        self.parent_edge = [-1] * n
        self.sequence = [None] * n if tracing else None


def _tree_path(graph, parent_edge, root: int, vertex: int) -> tuple[int, ...]:
    backwards = []
    while vertex != root:
        e = parent_edge[vertex]
        backwards.append(e)
        vertex = graph.origin(e)
    backwards.reverse()
    return tuple(backwards)


def _dfs_from(adjacency, diagram, root, counters, trace, scratch, stamp):
    graph = diagram.graph
    labels = diagram.labels
    mon = diagram.monoid
    visited = scratch.visited
    m_value = scratch.m_value
    parent_edge = scratch.parent_edge
    sequence = scratch.sequence

    visited[root] = stamp
    m_value[root] = mon.identity()
    if sequence is not None:
        sequence[root] = ()
    stack = [(root, 0)]
    while stack:
        v, pos = stack[-1]
        out = adjacency[v]
        if pos == len(out):
            stack.pop()
            continue
        stack[-1] = (v, pos + 1)
        e = out[pos]
        u = graph.tail(e)
        counters.mult_dfs += 1
        product = mon.op(m_value[v], labels[e])
        if trace is not None:
            trace.products.append((sequence[v], (e,)))
        if visited[u] != stamp:
            visited[u] = stamp
            m_value[u] = product
            parent_edge[u] = e
            if sequence is not None:
                sequence[u] = sequence[v] + (e,)
            stack.append((u, 0))
        else:
            counters.eq_dfs += 1
            if trace is not None:
                trace.relations.append((sequence[u], sequence[v] + (e,)))
            if not mon.eq(m_value[u], product):
                stored = _tree_path(graph, parent_edge, root, u)
                derived = _tree_path(graph, parent_edge, root, v) + (e,)
                return PathMismatch(
                    Path(stored, root, u),
                    Path(derived, root, u),
                )
    return None


def dfs_check(diagram: Diagram, root: int, counters: Counters, trace: RelationTrace | None = None):
    """Label-checked DFS from one root on an already-reduced diagram (no
    loops, no parallel edges), with fresh marks and m-values."""
    scratch = _DfsScratch(diagram.graph.vertex_count, tracing=trace is not None)
    return _dfs_from(diagram.graph.adjacency, diagram, root, counters, trace, scratch, 0)


def reduced_edge_count(diagram: Diagram) -> int:
    """The size of the edge set after removing every loop and merging every
    parallel bundle: one edge per distinct (origin, tail) pair with the two
    endpoints different.  Always below the squared vertex count."""
    return len({pair for pair in diagram.graph.edges if pair[0] != pair[1]})


def verify(diagram: Diagram, trace: bool = False) -> VerificationReport:
    """Decide commutativity, counting every monoid operation.

    Returns a full report; on the first violation the counters reflect the
    work done up to the stop and the witness pinpoints it.
    """
    relation_trace = RelationTrace() if trace else None
    counters = Counters()
    working = WorkingDiagram(diagram)
    witness = remove_loops(working, counters, relation_trace)
    if witness is None:
        witness = remove_multiple_edges(working, counters, relation_trace)
    if witness is None:
        n = diagram.graph.vertex_count
        scratch = _DfsScratch(n, tracing=trace)
        for root in range(n):
            witness = _dfs_from(
                working.adjacency, diagram, root, counters, relation_trace, scratch, root
            )
            if witness is not None:
                break
    return VerificationReport(
        commutative=witness is None,
        counters=counters,
        reduced_edges=reduced_edge_count(diagram),
        witness=witness,
        trace=relation_trace,
    )


# ---------------------------------------------------------------------------
# Closed-form operation bounds


def bound_eq_checks(n: int, m: int, reduced_edges: int | None = None) -> int:
    """Upper bound on equality checks for an n-vertex, m-edge input; with the
    reduced edge count supplied, the tighter post-reduction form."""
    if reduced_edges is None:
        return min(n * n, m) * min(n, m + 1) + m
    return reduced_edges * min(n, reduced_edges + 1) + m


def bound_mults(n: int, m: int, reduced_edges: int | None = None) -> int:
    """Upper bound on multiplications; same shape without the +m term."""
    if reduced_edges is None:
        return min(n * n, m) * min(n, m + 1)
    return reduced_edges * min(n, reduced_edges + 1)
