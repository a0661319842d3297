from __future__ import annotations

import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idslib import (
    ContractError,
    VertexSet,
    check_ids,
    check_ids_tree,
    nonleaf_mvc_tree,
    plan_forest,
    solve_mids_exact,
    solve_mids_tree,
)

from conftest import forests
from oracles import (
    brute_nonleaf_mvc_size,
    cycle_graph,
    disjoint_union,
    path_graph,
    single_vertex,
    star_graph,
)


def test_plan_p3():
    plan = plan_forest(path_graph(3))
    assert plan.roots == (1,)
    assert plan.order == (2, 0, 1)
    assert plan.parents == (1, -1, 1)
    assert plan.leaf_flags == (True, False, True)


def test_plan_roots_of_leafless_components():
    two_edges = disjoint_union(path_graph(2), path_graph(2))
    assert plan_forest(two_edges).roots == (0, 2)


def test_plan_rejects_cycles():
    with pytest.raises(ContractError):
        plan_forest(cycle_graph(4))


@given(forests())
def test_plan_orders_children_before_parents(g):
    plan = plan_forest(g)
    n = g.vertex_count
    assert sorted(plan.order) == list(range(n))
    position = {v: i for i, v in enumerate(plan.order)}
    for v, p in enumerate(plan.parents):
        if p >= 0:
            assert position[v] < position[p]
            assert p in g.neighbors[v]
    assert all(plan.parents[r] == -1 for r in plan.roots)
    assert sum(1 for p in plan.parents if p == -1) == len(plan.roots)
    for comp, root in zip(g.components(), plan.roots):
        nonleaves = [v for v in comp if len(g.neighbors[v]) >= 2]
        assert root == (min(nonleaves) if nonleaves else comp.members[0])
    assert plan.leaf_flags == tuple(len(g.neighbors[v]) == 1 for v in range(n))


def test_nonleaf_cover_examples():
    assert nonleaf_mvc_tree(path_graph(3)).members == (1,)
    assert nonleaf_mvc_tree(path_graph(4)).members == (1, 2)
    assert nonleaf_mvc_tree(star_graph(5)).members == (0,)
    assert nonleaf_mvc_tree(single_vertex()).members == ()


def test_nonleaf_cover_rejects_a_bare_edge():
    with pytest.raises(ContractError) as err:
        nonleaf_mvc_tree(disjoint_union(path_graph(3), path_graph(2)))
    assert "single edge" in str(err.value)


@given(forests())
def test_nonleaf_cover_is_minimum(g):
    if any(len(c) == 2 for c in g.components()):
        with pytest.raises(ContractError):
            nonleaf_mvc_tree(g)
        assert brute_nonleaf_mvc_size(g) is None or any(len(c) == 2 for c in g.components())
        return
    cover = nonleaf_mvc_tree(g)
    assert g.is_vertex_cover(cover)
    assert all(len(g.neighbors[v]) != 1 for v in cover)
    assert len(cover) == brute_nonleaf_mvc_size(g)


def test_tree_solver_examples():
    assert list(solve_mids_tree(path_graph(3)).vertices.labels(path_graph(3))) == ["v2"]
    assert list(solve_mids_tree(path_graph(4)).vertices.labels(path_graph(4))) == ["v2", "v3"]
    assert solve_mids_tree(single_vertex()).vertices.members == (0,)
    assert solve_mids_tree(path_graph(2)).vertices.members == (0,)
    result = solve_mids_tree(path_graph(5))
    assert result.size == 3 and result.optimal and result.subsets_tested == 0


def test_tree_solver_rejects_cycles():
    with pytest.raises(ContractError):
        solve_mids_tree(cycle_graph(5))


@given(forests())
@settings(max_examples=75)
def test_tree_solver_agrees_with_exhaustive_search(g):
    fast = solve_mids_tree(g)
    assert fast.optimal and fast.within_bound
    assert check_ids(g, fast.vertices).is_ids
    assert fast.size == solve_mids_exact(g).size


def test_long_path_is_solved_without_enumeration():
    n = 20_001
    g = path_graph(n)
    started = time.perf_counter()
    result = solve_mids_tree(g)
    elapsed = time.perf_counter() - started
    assert result.size == n - 2
    assert result.subsets_tested == 0
    assert check_ids_tree(g, result.vertices)
    assert elapsed < 5.0


def test_tree_check_examples():
    g = path_graph(3)
    assert check_ids_tree(g, VertexSet.of([1], 3))
    assert check_ids_tree(g, VertexSet.of([0], 3))
    assert not check_ids_tree(g, VertexSet.of([], 3))


def test_tree_check_validation():
    with pytest.raises(ContractError):
        check_ids_tree(cycle_graph(4), VertexSet.of([0], 4))
    with pytest.raises(ContractError):
        check_ids_tree(path_graph(3), VertexSet.of([0], 4))


@given(forests(max_vertices=9), st.integers(min_value=0, max_value=511))
@settings(max_examples=100)
def test_tree_check_agrees_with_enumeration(g, pick):
    members = [v for v in range(g.vertex_count) if pick >> v & 1]
    subset = VertexSet.of(members, g.vertex_count)
    assert check_ids_tree(g, subset) == check_ids(g, subset).is_ids
