from math import comb

import pytest

from conftest import eps
from toricsplit import errors
from toricsplit.errors import BudgetExceeded, NotSubgraph
from toricsplit.fibers import (Binomial, Monomial, a_degree, binomial_in_subgraph_ideal,
                               count_minimal_systems, enumerate_fiber, generates,
                               generator_fibers, ideal_contained, ideal_equals_ambient,
                               indispensable_binomials, indispensable_monomials, is_primitive,
                               minimal_binomials, minimal_generating_set, mu, revlex_key,
                               spanning_selections, sum_equals_ambient)
from toricsplit.graph import complete, complete_bipartite, cycle, delete_edges, edge_subgraph
from toricsplit.oracle import box_fibers, corpus


def B(g, plus, minus):
    return Binomial.make(Monomial.of(g.find_label(x) for x in plus),
                         Monomial.of(g.find_label(x) for x in minus))


def test_binomial_normal_form():
    b = Binomial.make(Monomial.of([3, 1, 5]), Monomial.of([1, 2, 4]))
    assert b.plus == Monomial((2, 4)) and b.minus == Monomial((3, 5))
    with pytest.raises(ValueError):
        Binomial.make(Monomial((1, 2)), Monomial((2, 1)))


def test_monomial_arithmetic():
    m = Monomial.of([1, 1, 2])
    assert Monomial((1,)).divides(m) and not Monomial((3,)).divides(m)
    assert m / Monomial((1,)) == Monomial((1, 2))
    assert m.gcd(Monomial((1, 3))) == Monomial((1,))
    with pytest.raises(ValueError):
        Monomial((1,)) / m


def test_a_degree(k4):
    assert a_degree(k4, Monomial((0, 5))) == (1, 1, 1, 1)


def test_k4_canonical_system(k4):
    system = minimal_generating_set(k4)
    assert set(system) == {B(k4, ["ε12", "ε34"], ["ε14", "ε23"]),
                           B(k4, ["ε12", "ε34"], ["ε13", "ε24"])}
    assert count_minimal_systems(k4) == 3
    assert indispensable_binomials(k4) == frozenset()
    assert len(minimal_binomials(k4)) == 3


def test_ten_gon_canonical_system(tengon):
    expected = {
        B(tengon, ["e1", "e5"], ["e11", "e12"]),
        B(tengon, ["e1", "e9", "e13"], ["e8", "e10", "e12"]),
        B(tengon, ["e5", "e8", "e10"], ["e9", "e11", "e13"]),
        B(tengon, ["e2", "e4", "e6", "e13"], ["e3", "e5", "e7", "e12"]),
        B(tengon, ["e2", "e4", "e6", "e8", "e10"], ["e3", "e7", "e9", "e11", "e12"]),
    }
    assert set(minimal_generating_set(tengon)) == expected
    assert mu(tengon) == 5
    # the degree (1,...,1) fiber has components of sizes 2 and 1
    assert count_minimal_systems(tengon) == 2
    assert len(indispensable_binomials(tengon)) == 4


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_complete_graph_mu(n):
    assert mu(complete(n)) == 2 * comb(n, 4)


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 3), (3, 4)])
def test_complete_bipartite_mu(m, n):
    g = complete_bipartite(m, n)
    assert mu(g) == comb(m, 2) * comb(n, 2)
    # bipartite: unique minimal system, all generators indispensable
    assert count_minimal_systems(g) == 1
    assert len(indispensable_binomials(g)) == mu(g)


def test_minimal_system_counts():
    assert count_minimal_systems(complete(5)) == 3 ** 5
    assert count_minimal_systems(complete(6)) == 3 ** 15 == 14_348_907


def test_fiber_enumeration_matches_box_scan():
    for _, g in list(corpus(max_vertices=5)):
        for deg, mons in box_fibers(g).items():
            fb = enumerate_fiber(g, deg)
            assert sorted(m.edges for m in fb.monomials) == sorted(mons)


def test_fiber_components(k4):
    fb = enumerate_fiber(k4, (1, 1, 1, 1))
    assert len(fb.monomials) == 3 and len(fb.components) == 3 and fb.mu == 2
    fb = enumerate_fiber(k4, (2, 2, 2, 2))
    assert fb.is_connected


def test_fiber_budget(k4):
    saved = errors.BUDGET.fiber_cap
    try:
        errors.BUDGET.fiber_cap = 2
        enumerate_fiber.cache_clear()
        with pytest.raises(BudgetExceeded):
            enumerate_fiber(k4, (1, 1, 1, 1))
    finally:
        errors.BUDGET.fiber_cap = saved
        enumerate_fiber.cache_clear()


def test_selection_count_matches_product_formula():
    for g in (complete(4), complete(5)):
        total = 1
        for fb in generator_fibers(g):
            total *= sum(1 for _ in spanning_selections(fb))
        assert total == count_minimal_systems(g)


def test_every_selection_generates(k4):
    (fb,) = generator_fibers(k4)
    for sel in spanning_selections(fb):
        assert generates(k4, sel)
    assert not generates(k4, list(minimal_generating_set(k4))[:1])


def test_is_primitive():
    g = cycle(6)
    assert is_primitive(g, Binomial.make(Monomial((0, 2, 4)), Monomial((1, 3, 5))))
    k4 = complete(4)
    # e12^2 e34^2 - e13 e24 e14 e23 is divisible termwise by e12 e34 - e13 e24
    b = Binomial.make(Monomial((0, 0, 5, 5)), Monomial((1, 2, 3, 4)))
    assert not is_primitive(k4, b)


def test_indispensable_monomials(k4):
    assert len(indispensable_monomials(k4)) == 3


def test_subgraph_membership(k4):
    b = B(k4, ["ε12", "ε34"], ["ε14", "ε23"])
    h = delete_edges(k4, {eps(k4, 1, 3)})
    assert binomial_in_subgraph_ideal(b, h, k4)
    assert not binomial_in_subgraph_ideal(b, delete_edges(k4, {eps(k4, 1, 2)}), k4)
    with pytest.raises(NotSubgraph):
        binomial_in_subgraph_ideal(b, complete(5), k4)


def test_ideal_criteria_agree_with_generation():
    """The fast equality and sum tests agree with explicit generation."""
    for _, g in corpus(max_vertices=5):
        if mu(g) < 2:
            continue
        edges = list(g.edge_ids)
        for drop in edges:
            h = delete_edges(g, {drop})
            gens_h = list(minimal_generating_set(h))
            assert ideal_equals_ambient(h, g) == generates(g, gens_h)
            for drop2 in edges:
                h2 = delete_edges(g, {drop2})
                both = gens_h + list(minimal_generating_set(h2))
                assert sum_equals_ambient(g, [h, h2]) == generates(g, both)


def test_ideal_containment(k4):
    c = edge_subgraph(k4, {eps(k4, 1, 2), eps(k4, 2, 3), eps(k4, 3, 4), eps(k4, 1, 4)})
    assert ideal_contained(c, k4) and not ideal_contained(k4, c)


def test_revlex_order():
    assert revlex_key((0, 5)) < revlex_key((1, 4)) < revlex_key((2, 3))
