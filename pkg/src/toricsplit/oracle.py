"""Brute-force ground truth for small graphs, independent of the walk theory.

Every monomial whose vertex degree fits under the graph's own degree sequence
is generated edge by edge and grouped by degree; each group is a complete
fiber.  Minimal and indispensable binomials, minimal-system counts and
splittings are then read off by exhaustive search.  Nothing here uses
primitive walks, chords or the fast ideal criteria of the main modules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx

from .errors import BudgetExceeded
from .fibers import Binomial, Monomial
from .graph import Graph, edge_subgraph

EDGE_CAP = 14


@lru_cache(maxsize=None)
def box_fibers(g: Graph) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """All fibers of degree ``b`` with ``b(v) <= deg(v)`` for every vertex."""
    if g.num_edges > EDGE_CAP:
        raise BudgetExceeded(f"oracle limited to {EDGE_CAP} edges")
    edges = [g.edge(i) for i in g.edge_ids]
    ids = g.edge_ids
    room = [g.degree(v) if v in g.vertex_set else 0 for v in range(g.n)]
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    chosen: list[int] = []

    def walk(k: int) -> None:
        if k == len(edges):
            deg = tuple(g.degree(v) - room[v] if v in g.vertex_set else 0 for v in range(g.n))
            groups.setdefault(deg, []).append(tuple(chosen))
            return
        u, v = edges[k]
        for x in range(min(room[u], room[v]) + 1):
            room[u] -= x
            room[v] -= x
            chosen.extend([ids[k]] * x)
            walk(k + 1)
            del chosen[len(chosen) - x:]
            room[u] += x
            room[v] += x

    walk(0)
    return groups


def _components(monomials: list[tuple[int, ...]]) -> list[list[tuple[int, ...]]]:
    """Connected components of the shares-a-variable graph, by pairwise checks."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(monomials)))
    for i, j in itertools.combinations(range(len(monomials)), 2):
        if set(monomials[i]) & set(monomials[j]):
            graph.add_edge(i, j)
    comps = [sorted(monomials[i] for i in c) for c in nx.connected_components(graph)]
    comps.sort()
    return comps


@lru_cache(maxsize=None)
def disconnected_fibers(g: Graph) -> dict[tuple[int, ...], list[list[tuple[int, ...]]]]:
    out = {}
    top = 2 * g.num_edges
    for deg, mons in box_fibers(g).items():
        if len(mons) < 2:
            continue
        comps = _components(mons)
        if len(comps) > 1:
            assert sum(deg) < top, "disconnected fiber in the top degree band"
            out[deg] = comps
    return out


def oracle_mu(g: Graph) -> int:
    return sum(len(c) - 1 for c in disconnected_fibers(g).values())


def oracle_generator_degrees(g: Graph) -> set[tuple[int, ...]]:
    return set(disconnected_fibers(g))


def oracle_minimal_binomials(g: Graph) -> set[Binomial]:
    out = set()
    for comps in disconnected_fibers(g).values():
        for a, b in itertools.combinations(comps, 2):
            for m in a:
                for m2 in b:
                    out.add(Binomial.make(Monomial(m), Monomial(m2)))
    return out


def oracle_indispensables(g: Graph) -> set[Binomial]:
    return {Binomial.make(Monomial(c[0][0]), Monomial(c[1][0]))
            for c in disconnected_fibers(g).values()
            if len(c) == 2 and len(c[0]) == 1 and len(c[1]) == 1}


def _connects(n_comps: int, pairs) -> bool:
    parent = list(range(n_comps))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def oracle_count_minimal_systems(g: Graph, cap: int = 100_000) -> int:
    """Count minimal systems by listing, per fiber, every set of c-1 binomials
    that joins all components; multiply across fibers."""
    total = 1
    for comps in disconnected_fibers(g).values():
        where = {m: k for k, c in enumerate(comps) for m in c}
        cross = [(m, m2) for m, m2 in itertools.combinations(sorted(where), 2) if where[m] != where[m2]]
        c = len(comps)
        count = 0
        for sel in itertools.combinations(cross, c - 1):
            count += 1 if _connects(c, [(where[m], where[m2]) for m, m2 in sel]) else 0
            if count > cap:
                raise BudgetExceeded("too many minimal systems to list")
        total *= count
    return total


# -- splittings ---------------------------------------------------------------------


def _fiber_sum_connected(g: Graph, parts: list[frozenset[int]]) -> bool:
    """Does ``sum I_H`` for the given edge sets reach every disconnected fiber of ``g``?

    A binomial of ``I_H`` moves between two fiber monomials only if they agree
    outside ``E(H)``; with all of ``I_H`` available, any two such monomials are
    joined (their quotient by the common part is a binomial of ``I_H``).
    """
    for deg, comps in disconnected_fibers(g).items():
        mons = box_fibers(g)[deg]
        graph = nx.Graph()
        graph.add_nodes_from(mons)
        for edges in parts:
            for m, m2 in itertools.combinations(mons, 2):
                rest = [e for e in m if e not in edges]
                rest2 = [e for e in m2 if e not in edges]
                if rest == rest2:
                    graph.add_edge(m, m2)
        if nx.number_connected_components(graph) > 1:
            return False
    return True


def _is_proper(g: Graph, edges: frozenset[int]) -> bool:
    """``I_H != I_G``: some fiber component of ``g`` has no monomial inside ``H``."""
    for comps in disconnected_fibers(g).values():
        for c in comps:
            if not any(set(m) <= edges for m in c):
                return True
    return False


def candidate_subgraphs(g: Graph) -> list[frozenset[int]]:
    """Edge sets spanned by subsets of the minimal binomials."""
    supports = sorted({bn.support for bn in oracle_minimal_binomials(g)}, key=sorted)
    found = {frozenset()}
    for s in supports:
        found |= {f | s for f in found}
    found.discard(frozenset())
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def oracle_splittable(g: Graph) -> bool:
    """Exhaustive verdict over pairs of candidate subgraphs.

    Enlarging one side of a splitting keeps it a splitting as long as the side
    stays proper, so it suffices to try pairs of maximal proper candidates.
    """
    proper = [s for s in candidate_subgraphs(g) if _is_proper(g, s)]
    maximal = [s for s in proper if not any(s < t for t in proper)]
    for a, b in itertools.combinations_with_replacement(maximal, 2):
        if _fiber_sum_connected(g, [a, b]):
            return True
    return False


def ideal_signature(g: Graph, edges: frozenset[int]) -> frozenset[Binomial]:
    """Minimal binomials of the subgraph, recomputed from its own fibers."""
    return frozenset(oracle_minimal_binomials(edge_subgraph(g, edges)))


def oracle_splittings(g: Graph, mu_cap: int = 12) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All splittings by candidate subgraphs, one edge-set pair per ideal pair."""
    if oracle_mu(g) > mu_cap:
        raise BudgetExceeded(f"oracle splitting enumeration limited to mu <= {mu_cap}")
    reps: dict[frozenset[Binomial], frozenset[int]] = {}
    for s in candidate_subgraphs(g):
        if _is_proper(g, s):
            reps.setdefault(ideal_signature(g, s), s)
    out = []
    for a, b in itertools.combinations(reps.values(), 2):
        if _fiber_sum_connected(g, [a, b]):
            out.append((a, b))
    return out


# -- agreement with the main modules -------------------------------------------------


@dataclass
class OracleReport:
    graph: str
    mu: int
    generator_degrees: int
    minimal_binomials: int
    indispensables: int
    splittable: bool
    disagreements: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def oracle_report(g: Graph, name: str = "", splittings: bool = True) -> OracleReport:
    """Compare every main-path answer for ``g`` with the brute-force one."""
    from . import fibers, splitting, walks

    bad = []
    o_mu = oracle_mu(g)
    if fibers.mu(g) != o_mu:
        bad.append(f"mu: main {fibers.mu(g)} oracle {o_mu}")
    main_degrees = {fb.degree for fb in fibers.generator_fibers(g)}
    if main_degrees != oracle_generator_degrees(g):
        bad.append("generator degrees differ")
    o_min = oracle_minimal_binomials(g)
    if set(fibers.minimal_binomials(g)) != o_min:
        bad.append("fiber minimal binomials differ")
    walk_min = {w.binomial() for w in walks.minimal_walks(g)}
    if walk_min != o_min:
        bad.append(f"walk-minimal binomials differ: {sorted(b.format(g) for b in walk_min ^ o_min)}")
    o_ind = oracle_indispensables(g)
    walk_ind = {w.binomial() for w in walks.indispensable_walks(g)}
    if walk_ind != o_ind:
        bad.append(f"walk-indispensable binomials differ: {sorted(b.format(g) for b in walk_ind ^ o_ind)}")
    if set(fibers.indispensable_binomials(g)) != o_ind:
        bad.append("fiber indispensable binomials differ")
    if fibers.count_minimal_systems(g) <= 100_000:
        if fibers.count_minimal_systems(g) != oracle_count_minimal_systems(g):
            bad.append("minimal system counts differ")
    verdict = False
    if splittings:
        verdict = oracle_splittable(g)
        main = splitting.is_subgraph_splittable(g)
        if main != verdict:
            bad.append(f"splittable: main {main} oracle {verdict}")
    return OracleReport(name or repr(g), o_mu, len(main_degrees), len(o_min), len(o_ind),
                        verdict, bad)


def corpus(max_vertices: int = 6, max_edges: int = 10, min_vertices: int = 1):
    """Connected graphs up to isomorphism from the networkx atlas, as ``(name, Graph)``."""
    for k, atlas_graph in enumerate(nx.graph_atlas_g()):
        n = atlas_graph.number_of_nodes()
        if not (min_vertices <= n <= max_vertices) or atlas_graph.number_of_edges() > max_edges:
            continue
        if n == 0 or not nx.is_connected(atlas_graph):
            continue
        edges = sorted(tuple(sorted(e)) for e in atlas_graph.edges())
        yield f"G{k}", Graph.from_edges(n, edges)
