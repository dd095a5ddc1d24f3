"""Graph structure, predicates, and the loop-count formula."""

from __future__ import annotations

import random

import pytest

from diagcheck import (
    Path,
    TriploidParams,
    build,
    has_multiple_edges,
    has_triangle,
    is_2_path_bounded,
    is_quasi_acyclic,
    is_valid_path,
    loop_count,
    strip_loops,
    triploid,
)

from .conftest import triangle_graph


def test_build_read_back_is_identity():
    edges = [(0, 1), (1, 1), (1, 0), (0, 1)]
    graph = build(2, edges)
    assert graph.edges == tuple(edges)
    assert graph.adjacency == ((0, 3), (1, 2))


def test_build_single_edge_and_loop():
    assert build(2, [(0, 1)]).edge_count == 1
    loop = build(1, [(0, 0)])
    assert loop.is_loop(0)


def test_build_rejects_out_of_range_endpoints():
    with pytest.raises(ValueError):
        build(2, [(0, 2)])
    with pytest.raises(ValueError):
        build(2, [(-1, 0)])


def test_fig4_triploid_shape():
    graph = triploid(TriploidParams(3, 2, 4, 2, 16))
    assert graph.vertex_count == 11
    assert graph.edge_count == 16
    assert loop_count(graph) == 2


def test_quasi_acyclic():
    assert not is_quasi_acyclic(build(2, [(0, 1), (1, 0)]))
    assert is_quasi_acyclic(build(1, [(0, 0)]))
    assert is_quasi_acyclic(triploid(TriploidParams(3, 2, 4, 2, 16)))
    assert not is_quasi_acyclic(build(3, [(0, 1), (1, 2), (2, 0)]))


def test_two_path_bounded():
    assert not is_2_path_bounded(build(4, [(0, 1), (1, 2), (2, 3)]))
    assert is_2_path_bounded(triploid(TriploidParams(3, 2, 4, 2, 16)))
    assert is_2_path_bounded(build(4, [(0, 1), (1, 3), (0, 2), (2, 3)]))
    # Loops never extend a loop-free walk.
    assert is_2_path_bounded(build(3, [(0, 0), (0, 1), (1, 2)]))


def test_has_triangle():
    assert has_triangle(triangle_graph())
    assert not has_triangle(triploid(TriploidParams(3, 2, 4, 2, 16)))
    assert not has_triangle(build(1, []))


def test_has_multiple_edges():
    assert has_multiple_edges(build(2, [(0, 1), (0, 1)]))
    assert not has_multiple_edges(build(1, [(0, 0), (0, 0)]))
    assert not has_multiple_edges(triploid(TriploidParams(3, 2, 4, 2, 16)))


def test_loop_count_against_direct_count():
    for params in (TriploidParams(3, 2, 4, 2, 16), TriploidParams(1, 2, 1, 0, 10)):
        graph = triploid(params)
        direct = sum(1 for origin, tail in graph.edges if origin == tail)
        assert loop_count(graph) == direct == params.loops
    assert loop_count(triploid(TriploidParams(1, 2, 1, 0, 10))) == 6
    assert loop_count(build(2, [(0, 1)])) == 0


def test_strip_loops_keeps_bipartite_prefix_ids():
    graph = triploid(TriploidParams(3, 2, 4, 2, 16))
    stripped = strip_loops(graph)
    assert stripped.edge_count == 14
    assert stripped.edges == graph.edges[:14]
    assert loop_count(stripped) == 0


def test_path_validity():
    graph = build(3, [(0, 1), (1, 2)])
    assert is_valid_path(graph, Path((0, 1), 0, 2))
    assert is_valid_path(graph, Path((), 1, 1))
    assert not is_valid_path(graph, Path((), 1, 2))
    assert not is_valid_path(graph, Path((1, 0), 1, 1))
    assert not is_valid_path(graph, Path((0,), 0, 2))
    assert not is_valid_path(graph, Path((7,), 0, 1))


def _has_multi_vertex_cycle(graph) -> bool:
    # Independent white/gray/black DFS over non-loop edges.
    n = graph.vertex_count
    color = [0] * n
    adjacency = [[] for _ in range(n)]
    for origin, tail in graph.edges:
        if origin != tail:
            adjacency[origin].append(tail)

    def visit(v) -> bool:
        color[v] = 1
        for u in adjacency[v]:
            if color[u] == 1:
                return True
            if color[u] == 0 and visit(u):
                return True
        color[v] = 2
        return False

    return any(color[v] == 0 and visit(v) for v in range(n))


def test_quasi_acyclic_matches_cycle_search_on_random_graphs():
    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(1, 7)
        m = rng.randint(0, 10)
        graph = build(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])
        assert is_quasi_acyclic(graph) == (not _has_multi_vertex_cycle(graph))
