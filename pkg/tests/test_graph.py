from __future__ import annotations

import pytest
from hypothesis import given

from idslib import (
    ContractError,
    FormatError,
    Graph,
    VertexSet,
    graph_from_json,
    graph_to_json,
    parse_graph,
    to_dot,
    to_edge_list,
)

from conftest import graphs
from oracles import cycle_graph, path_graph, star_graph, two_triangles


def test_parse_assigns_ids_in_first_appearance_order():
    g = parse_graph("a b\nb c\n")
    assert g.labels == ("a", "b", "c")
    assert g.edges() == [(0, 1), (1, 2)]


def test_parse_comments_blanks_and_isolated_vertices():
    g = parse_graph("# header\n\na b\nv lonely\n  \nb c\n")
    assert g.labels == ("a", "b", "lonely", "c")
    assert g.degree(2) == 0
    assert g.edge_count == 2


def test_parse_duplicate_edge_reports_line_number():
    with pytest.raises(FormatError, match="line 2"):
        parse_graph("a b\nb a\n")


def test_parse_self_loop_rejected():
    with pytest.raises(FormatError, match="self-loop"):
        parse_graph("a a\n")


def test_parse_malformed_line_reports_line_number():
    with pytest.raises(FormatError, match="line 3"):
        parse_graph("a b\nb c\nx y z\n")


def test_parse_bad_vertex_line():
    with pytest.raises(FormatError, match="line 1"):
        parse_graph("v one two\n")


def test_from_edges_rejects_duplicates_and_range():
    with pytest.raises(FormatError):
        Graph.from_edges(["a", "b"], [(0, 1), (1, 0)])
    with pytest.raises(FormatError):
        Graph.from_edges(["a", "b"], [(0, 2)])
    with pytest.raises(FormatError):
        Graph.from_edges(["a", "a"], [])


def test_degrees():
    c4 = cycle_graph(4)
    assert [c4.degree(v) for v in range(4)] == [2, 2, 2, 2]
    assert star_graph(4).degree(0) == 3
    assert parse_graph("v a\n").degree(0) == 0
    with pytest.raises(ContractError):
        c4.degree(4)


def test_components_and_forest():
    g = two_triangles()
    comps = g.components()
    assert [c.members for c in comps] == [(0, 1, 2), (3, 4, 5)]
    assert not g.is_forest()
    assert path_graph(4).is_forest()
    assert not cycle_graph(4).is_forest()
    assert Graph.from_edges([], []).components() == []
    assert Graph.from_edges([], []).is_forest()


def test_vertex_cover_examples():
    p3 = path_graph(3)
    assert p3.is_vertex_cover(VertexSet.of([1], 3))
    assert not path_graph(4).is_vertex_cover(VertexSet.of([1], 4))
    assert cycle_graph(4).is_vertex_cover(VertexSet.of(range(4), 4))
    with pytest.raises(ContractError):
        p3.is_vertex_cover(VertexSet.of([0], 4))


def test_vertex_set_validation():
    with pytest.raises(ContractError):
        VertexSet((1, 1), 3)
    with pytest.raises(ContractError):
        VertexSet((2, 1), 3)
    with pytest.raises(ContractError):
        VertexSet((3,), 3)
    s = VertexSet.of([2, 0, 2], 4)
    assert s.members == (0, 2)
    assert s.mask == 0b101
    assert 2 in s and 1 not in s
    assert len(s) == 2


def test_id_of_unknown_label():
    with pytest.raises(ContractError, match="unknown vertex label"):
        path_graph(3).id_of("nope")


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_graph(to_edge_list(g)) == g


@given(graphs())
def test_json_round_trip(g):
    assert graph_from_json(graph_to_json(g)) == g


@given(graphs())
def test_degree_sum_is_twice_edge_count(g):
    assert sum(g.degree(v) for v in range(g.vertex_count)) == 2 * g.edge_count


@given(graphs())
def test_components_partition_vertices(g):
    seen = sorted(v for c in g.components() for v in c)
    assert seen == list(range(g.vertex_count))


def test_serializer_rejects_unwritable_labels():
    g = Graph.from_edges(["v", "x"], [(0, 1)])
    with pytest.raises(FormatError):
        to_edge_list(g)
    g2 = Graph.from_edges(["a b", "c"], [(0, 1)])
    with pytest.raises(FormatError):
        to_edge_list(g2)


def test_graph_from_json_errors():
    with pytest.raises(FormatError):
        graph_from_json("not json")
    with pytest.raises(FormatError):
        graph_from_json('{"vertices": ["a"]}')
    with pytest.raises(FormatError):
        graph_from_json('{"vertices": ["a", "b"], "edges": [[0, "b"]]}')


def test_dot_export_mentions_every_vertex_and_edge():
    dot = to_dot(path_graph(3))
    assert '"v1" -- "v2";' in dot and '"v2" -- "v3";' in dot
    assert '"v3";' in dot
    assert dot.startswith("graph G {")
