import json

import pytest

from toricsplit.errors import GraphError
from toricsplit.graph import (FAMILY_NAMES, Graph, blocks, complete, cycle, delete_edges,
                              delete_vertex, edge_subgraph, expected_edge_count, family,
                              roundabout, wheel)


@pytest.mark.parametrize("name,params", [
    ("complete", [5]), ("complete_bipartite", [2, 3]), ("cycle", [7]), ("wheel", [5]),
    ("roundabout", [4]), ("cycle_row", [4]), ("grid", [3, 4]),
])
def test_family_edge_counts(name, params):
    assert family(name, params).num_edges == expected_edge_count(name, params)


def test_family_names_cover_every_generator():
    assert set(FAMILY_NAMES) >= {"complete", "wheel", "roundabout", "cycle_row"}


def test_unknown_family_and_bad_arity():
    with pytest.raises(GraphError):
        family("petersen", [1])
    with pytest.raises(GraphError):
        family("complete", [3, 4])


def test_rejects_loops_and_multi_edges():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_text_and_json_round_trip():
    g = wheel(4)
    assert Graph.parse(g.to_text()) == g
    assert Graph.from_json(json.dumps(g.to_json())) == g


def test_parse_errors():
    with pytest.raises(GraphError):
        Graph.parse("")
    with pytest.raises(GraphError):
        Graph.parse("3 2\n1 2\n")
    with pytest.raises(GraphError):
        Graph.parse("three 1\n1 2\n")


def test_complete_labels_use_vertex_pairs():
    g = complete(4)
    assert [g.label(i) for i in g.edge_ids] == ["ε12", "ε13", "ε14", "ε23", "ε24", "ε34"]


def test_wheel_labels_hub_last():
    g = wheel(4)
    assert {g.label(i) for i in g.edge_ids} == {
        "ε12", "ε23", "ε34", "ε14", "ε15", "ε25", "ε35", "ε45"}


def test_subgraphs_keep_edge_indices():
    g = complete(4)
    h = delete_edges(g, {0, 5})
    assert h.edge_ids == (1, 2, 3, 4)
    assert h.is_subgraph_of(g) and not g.is_subgraph_of(h)
    assert edge_subgraph(g, {1, 2}).edge_ids == (1, 2)
    with pytest.raises(GraphError):
        delete_edges(h, {0})


def test_delete_vertex():
    g = delete_vertex(complete(4), 0)
    assert g.num_edges == 3 and 0 not in g.vertex_set


def test_blocks_of_bowtie():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bd = blocks(g)
    assert bd.blocks == (frozenset({0, 1, 2}), frozenset({3, 4, 5}))
    assert bd.cut_vertices == {2}


def test_roundabout_is_bipartite():
    g = roundabout(3)
    assert g.is_bipartite() and g.num_edges == 16 and len(g.vertex_set) == 11
    assert not complete(3).is_bipartite() and cycle(6).is_bipartite()
