import pytest

from toricsplit.errors import BudgetExceeded
from toricsplit.fibers import minimal_generating_set, mu
from toricsplit.graph import complete, cycle, cycle_row, edge_subgraph, grid, wheel
from toricsplit.oracle import (candidate_subgraphs, corpus, oracle_count_minimal_systems,
                               oracle_indispensables, oracle_minimal_binomials, oracle_mu,
                               oracle_report, oracle_splittable, oracle_splittings)
from toricsplit.splitting import enumerate_splittings
from toricsplit.fibers import ideal_contained


def test_k4_oracle(k4):
    assert len(oracle_minimal_binomials(k4)) == 3
    assert oracle_indispensables(k4) == set()
    assert oracle_count_minimal_systems(k4) == 3


def test_ten_gon_oracle(tengon):
    assert oracle_mu(tengon) == 5
    assert set(minimal_generating_set(tengon)) <= oracle_minimal_binomials(tengon)


def test_wheel_oracle():
    g = wheel(4)
    assert oracle_mu(g) == 5
    ind = {b.format(g) for b in oracle_indispensables(g)}
    # the rim cycle and the four 4-cycles through the hub and two consecutive rim edges
    assert ind == {"ε12*ε34 - ε23*ε14", "ε12*ε35 - ε23*ε15", "ε12*ε45 - ε14*ε25",
                   "ε34*ε15 - ε14*ε35", "ε23*ε45 - ε34*ε25"}


def test_bipartite_indispensables_are_chordless_cycles():
    g = grid(3, 3)
    # four squares and the outer 8-cycle; the 6-cycles have a chord
    assert len(oracle_indispensables(g)) == oracle_mu(g) == 5


def test_edge_cap():
    with pytest.raises(BudgetExceeded):
        oracle_mu(complete(6))


def test_cycle_row_splittings_match():
    g = cycle_row(4)
    pairs = oracle_splittings(g)
    assert len(pairs) == 25
    main = enumerate_splittings(g)

    def key(a, b):
        return frozenset([a, b])

    main_keys = {key(frozenset(r.g1.edge_ids), frozenset(r.g2.edge_ids)) for r in main}
    assert main_keys == {key(a, b) for a, b in pairs}


def test_k4_splittings_match(k4):
    pairs = oracle_splittings(k4)
    main = enumerate_splittings(k4)
    assert len(pairs) == len(main)
    for r in main:
        assert any(
            {frozenset(r.g1.edge_ids), frozenset(r.g2.edge_ids)} == {a, b} for a, b in pairs)


def test_small_graphs_have_no_splittings():
    assert oracle_splittings(cycle(8)) == []
    assert not oracle_splittable(cycle(8))


def test_candidate_subgraphs_nonempty(k4):
    cands = candidate_subgraphs(k4)
    assert len(cands) == 4  # three 4-cycles and the whole graph
    assert frozenset(k4.edge_ids) in cands


def test_corpus_size():
    graphs = list(corpus())
    assert len(graphs) == 143 - 18  # connected graphs on <= 6 vertices, minus 18 with > 10 edges
    assert all(g.num_edges <= 10 for _, g in graphs)


def test_report_on_k5(k5):
    rep = oracle_report(k5, "K5")
    assert rep.ok and rep.mu == 10 and rep.splittable
