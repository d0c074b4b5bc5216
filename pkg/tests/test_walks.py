import pytest

from conftest import eps
from toricsplit.errors import ChordNotOdd, NotAChord, WalkError
from toricsplit.fibers import a_degree, is_primitive
from toricsplit.graph import Graph, complete, complete_bipartite, cycle, wheel
from toricsplit.walks import (Walk, classify_chord, classify_walk, crossing_kind,
                              enumerate_bridgeless_walks, enumerate_even_cycles,
                              enumerate_primitive_walks, is_strongly_primitive, simple_cycles,
                              sinks)


def walk(g, *names):
    return Walk.from_edges(g, [g.find_label(x) for x in names])


def test_simple_cycle_counts():
    assert len(simple_cycles(complete(4))) == 7
    assert len(simple_cycles(complete(5))) == 37
    assert len(simple_cycles(complete(5), max_len=4)) == 25
    assert simple_cycles(Graph.from_edges(3, [(0, 1), (1, 2)])) == []


def test_even_cycles_are_canonical():
    g = complete_bipartite(3, 3)
    cycles = enumerate_even_cycles(g)
    assert len(cycles) == 9 + 6
    for w in cycles:
        assert w.canonical() == w


def test_walk_construction_errors(k4):
    with pytest.raises(WalkError):
        Walk.from_vertices(k4, [0, 1, 2])
    with pytest.raises(WalkError):
        Walk.from_edges(k4, [eps(k4, 1, 2), eps(k4, 3, 4)])
    g = cycle(5)
    with pytest.raises(WalkError):
        Walk.from_vertices(g, [0, 2, 3, 4])


def test_canonical_form_is_rotation_and_reflection_invariant(k4):
    w = Walk.from_vertices(k4, [0, 1, 2, 3])
    for vs in ([2, 3, 0, 1], [0, 3, 2, 1], [1, 0, 3, 2]):
        assert Walk.from_vertices(k4, vs).canonical() == w.canonical()


def test_walk_binomial(k4):
    w = walk(k4, "ε12", "ε23", "ε34", "ε14")
    b = w.binomial()
    assert b.format(k4) == "ε12*ε34 - ε14*ε23"


@pytest.mark.parametrize("n,count", [(4, 3), (5, 30), (6, 285)])
def test_complete_graph_primitive_walk_counts(n, count):
    assert len(enumerate_primitive_walks(complete(n))) == count


def test_primitive_walks_are_primitive_and_canonical():
    for g in (complete(5), wheel(5), Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3),
                                                          (3, 4), (4, 5), (3, 5)])):
        for w in enumerate_primitive_walks(g):
            assert w.canonical() == w
            assert is_primitive(g, w.binomial())
            assert a_degree(g, w.odd_monomial) == a_degree(g, w.even_monomial)


def test_two_triangles_and_a_path():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)])
    (w,) = enumerate_primitive_walks(g)
    assert len(w) == 10  # path edges are walked twice
    assert is_strongly_primitive(g, w)
    assert classify_walk(g, w).indispensable


def test_bridgeless_walks_are_a_subset():
    g = wheel(5)
    every = set(enumerate_primitive_walks(g))
    assert set(enumerate_bridgeless_walks(g)) <= every


def test_chord_kinds_on_a_hub_cycle():
    g = wheel(5)  # hub is vertex 6
    w = walk(g, "ε12", "ε23", "ε34", "ε45", "ε56", "ε16")
    kinds = {g.label(f): classify_chord(g, w, f).kind for f in g.edge_ids if f not in w.edge_set}
    assert kinds == {"ε15": "odd", "ε26": "odd", "ε36": "even", "ε46": "odd"}
    c = classify_walk(g, w)
    assert c.primitive and not c.minimal
    assert "even chord ε36" in c.witness


def test_odd_chord_pieces(k4):
    w = walk(k4, "ε12", "ε23", "ε34", "ε14")
    cc = classify_chord(k4, w, eps(k4, 1, 3))
    assert cc.is_odd
    assert sorted(len(p) for p in cc.pieces) == [3, 3]


def test_bridge_chord():
    # bowtie plus an edge between the two wings
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (1, 3)])
    bow = [w for w in enumerate_primitive_walks(g) if len(w) == 6 and 6 not in w.edge_set]
    (w,) = [w for w in bow if w.edge_set == frozenset(range(6))]
    assert classify_chord(g, w, 6).kind == "bridge"
    assert not classify_walk(g, w).minimal


def test_not_a_chord(k4):
    w = walk(k4, "ε12", "ε23", "ε34", "ε14")
    with pytest.raises(NotAChord):
        classify_chord(k4, w, eps(k4, 1, 2))


def test_crossing_kinds(k4):
    w = walk(k4, "ε12", "ε23", "ε34", "ε14")
    assert crossing_kind(k4, w, eps(k4, 1, 3), eps(k4, 2, 4)) == "f4"
    with pytest.raises(ChordNotOdd):
        crossing_kind(k4, w, eps(k4, 1, 3), eps(k4, 1, 3))
    g = wheel(5)
    hw = walk(g, "ε12", "ε23", "ε34", "ε45", "ε56", "ε16")
    with pytest.raises(ChordNotOdd):
        crossing_kind(g, hw, g.find_label("ε36"), g.find_label("ε15"))


def test_effective_crossing_without_f4():
    g = complete(8)
    w = Walk.from_vertices(g, range(8))
    # {1,3} and {2,6} interleave at an odd offset and no walk edges close a 4-cycle
    assert crossing_kind(g, w, eps(g, 1, 3), eps(g, 2, 6)) == "effective"
    # {1,3} and {2,4} close a 4-cycle with walk edges {1,2} and {3,4}
    assert crossing_kind(g, w, eps(g, 1, 3), eps(g, 2, 4)) == "f4"
    assert crossing_kind(g, w, eps(g, 1, 3), eps(g, 5, 7)) == "none"
    with pytest.raises(ChordNotOdd):
        crossing_kind(g, w, eps(g, 1, 4), eps(g, 2, 6))


def test_k4_cycles_minimal_not_indispensable(k4):
    for w in enumerate_primitive_walks(k4):
        c = classify_walk(k4, w)
        assert c.minimal and not c.indispensable and c.f4_pairs


def test_ten_gon_classification(tengon):
    outer = walk(tengon, *[f"e{i}" for i in range(1, 11)])
    c = classify_walk(tengon, outer)
    assert c.minimal and not c.indispensable
    assert {tengon.label(f) for f in c.chords} == {"e11", "e12", "e13"}
    inner = walk(tengon, "e1", "e12", "e5", "e11")
    assert classify_walk(tengon, inner).indispensable


def test_adjacent_sinks_break_strong_primitivity():
    # a 4-cycle with triangles hanging at two adjacent corners
    g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (0, 5),
                             (1, 6), (6, 7), (1, 7)])
    (w,) = [w for w in enumerate_primitive_walks(g) if len(w) == 10]
    assert not is_strongly_primitive(g, w)
    assert [0, 1] in sinks(g, w).values()
    c = classify_walk(g, w)
    assert c.primitive and not c.strongly_primitive and not c.minimal
    assert "adjacent sinks" in c.witness


def test_non_primitive_walk(k4):
    w = Walk.from_vertices(k4, [0, 1, 2, 3, 0, 1, 2, 3])
    assert not classify_walk(k4, w).primitive


def test_json_round(k4):
    w = walk(k4, "ε12", "ε23", "ε34", "ε14")
    assert w.to_json(k4)["vertices"] == [1, 2, 3, 4]
    assert classify_walk(k4, w).to_json(k4)["minimal"] is True
