"""Splittings ``I_G = I_G1 + I_G2`` of a graph's toric ideal by two subgraphs.

The central construction: given a minimal system ``S`` and an edge ``e``,
``G_S^e`` is the union of the supports of the generators in ``S`` whose walk
uses ``e``.  Then ``I_G = I_{G_S^e} + I_{G\\e}`` always holds, and the ideal
is splittable by subgraphs exactly when some choice of ``(S, e)`` makes
``I_{G_S^e}`` a proper subideal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import errors
from .errors import (BudgetExceeded, GraphError, NoMatchingType, NotASplitting, NotReduced,
                     NotSubgraph, ClosedFormViolation)
from .fibers import (Binomial, Fiber, MinimalSystem, canonical_selection, generates,
                     generator_fibers, ideal_contained, ideal_equals_ambient, in_ideal,
                     minimal_binomials, minimal_generating_set, mu, spanning_selections,
                     sum_equals_ambient)
from .graph import Graph, complete, delete_edges, edge_subgraph, wheel


def _binomials(S) -> list[Binomial]:
    return list(S.binomials if isinstance(S, MinimalSystem) else S)


def support_graph(g: Graph, binomials) -> Graph:
    """Subgraph of ``g`` spanned by the variables of the given binomials."""
    edges = set()
    for bn in binomials:
        edges |= bn.support
    return edge_subgraph(g, edges)


def _check_system(g: Graph, S) -> list[Binomial]:
    bns = _binomials(S)
    if len(bns) != mu(g) or not generates(g, bns):
        raise GraphError("S is not a minimal generating system of the ideal")
    return bns


def g_s_F(g: Graph, S, F, check: bool = True) -> Graph:
    """Union of the generator walks of ``S`` that use some edge of ``F``."""
    F = set(F)
    for e in F:
        g.edge(e)
    bns = _check_system(g, S) if check else _binomials(S)
    return support_graph(g, [bn for bn in bns if bn.support & F])


def g_s_e(g: Graph, S, e: int, check: bool = True) -> Graph:
    """Union of the generator walks of ``S`` through the edge ``e``."""
    return g_s_F(g, S, {e}, check)


def g_s_v(g: Graph, S, v: int, check: bool = True) -> Graph:
    """Union of the generator walks of ``S`` through the vertex ``v``."""
    if v not in g.vertex_set:
        raise GraphError(f"unknown vertex {v + 1}")
    return g_s_F(g, S, {i for i in g.edge_ids if v in g.edge(i)}, check)


# -- edge splittability --------------------------------------------------------------


@dataclass(frozen=True)
class EdgeWitness:
    """A minimal system ``S`` and edge ``e`` with ``I_{G_S^e}`` a proper subideal."""

    edge: int
    system: tuple[Binomial, ...]
    g1: Graph  # G_S^e
    g2: Graph  # G \ e

    def to_json(self, g: Graph) -> dict:
        return {"edge": g.label(self.edge), "S": [bn.format(g) for bn in self.system]}


def _footprints(fb: Fiber, e: int, minimal_only: bool) -> dict[frozenset[int], list[Binomial]]:
    """Per spanning selection of one fiber: the edges its generators through ``e`` span."""
    found: dict[frozenset[int], list[Binomial]] = {}
    for sel in spanning_selections(fb):
        foot = frozenset().union(*(bn.support for bn in sel if e in bn.support))
        found.setdefault(foot, sel)
    if minimal_only:
        found = {f: s for f, s in found.items() if not any(o < f for o in found)}
    return found


def _avoid_low_edges(edges) -> tuple[int, ...]:
    # prefer unions that leave low-index edges out
    return tuple(-x for x in sorted(edges))


def _union_candidates(g: Graph, e: int, minimal_only: bool):
    """All unions ``E(G_S^e)`` as ``S`` varies (inclusion-minimal ones if asked)."""
    fibers = generator_fibers(g)
    per_fiber = []
    for k, fb in enumerate(fibers):
        if not any(e in m.edges for m in fb.monomials):
            continue
        fp = _footprints(fb, e, minimal_only)
        per_fiber.append((k, sorted(fp.items(), key=lambda kv: (len(kv[0]), _avoid_low_edges(kv[0])))))
    cap = errors.BUDGET.candidate_cap
    current: dict[frozenset[int], dict[int, list[Binomial]]] = {frozenset(): {}}
    for k, options in per_fiber:
        nxt: dict[frozenset[int], dict[int, list[Binomial]]] = {}
        for union, choice in current.items():
            for foot, sel in options:
                u = union | foot
                if u not in nxt:
                    nxt[u] = {**choice, k: sel}
                    if len(nxt) > cap:
                        raise BudgetExceeded(f"more than {cap} candidate unions for one edge")
        if minimal_only:
            nxt = {u: c for u, c in nxt.items() if not any(o < u for o in nxt)}
        current = nxt
    ordered = sorted(current.items(), key=lambda kv: (len(kv[0]), _avoid_low_edges(kv[0])))
    for union, choice in ordered:
        system = []
        for k, fb in enumerate(fibers):
            system.extend(choice.get(k) or canonical_selection(fb))
        yield union, tuple(system)


def is_edge_splittable(g: Graph) -> EdgeWitness | None:
    """Search every edge and every minimal system for a proper ``I_{G_S^e}``.

    Per edge, each fiber contributes the edge set its chosen generators through
    ``e`` span; only inclusion-minimal unions need testing because the ideal
    grows with the graph.  Raises ``BudgetExceeded`` when a cap is hit.
    """
    if mu(g) < 2:
        return None
    for e in g.edge_ids:
        for union, system in _union_candidates(g, e, minimal_only=True):
            if not union:
                continue
            h = edge_subgraph(g, union)
            if not ideal_equals_ambient(h, g):
                return EdgeWitness(e, system, h, delete_edges(g, {e}))
    return None


def is_subgraph_splittable(g: Graph) -> bool:
    return is_edge_splittable(g) is not None


def is_edge_splitting(g: Graph, g1: Graph, g2: Graph) -> EdgeWitness | None:
    """Whether the ideal pair of ``(g1, g2)`` equals some ``(I_{G_S^e}, I_{G\\e})``."""
    for a, b in ((g1, g2), (g2, g1)):
        for e in g.edge_ids:
            rest = delete_edges(g, {e})
            if not (ideal_contained(rest, b) and ideal_contained(b, rest)):
                continue
            for union, system in _union_candidates(g, e, minimal_only=False):
                h = edge_subgraph(g, union)
                if ideal_contained(h, a) and ideal_contained(a, h):
                    return EdgeWitness(e, system, h, rest)
    return None


def kn_reference_system(n: int) -> tuple[Binomial, ...]:
    """Minimal system of ``K_n`` whose walks through the edge {1,2} avoid {1,3}.

    For every four vertices ``i < j < k < l`` it uses the two binomials
    ``e_ij e_kl - e_il e_jk`` and ``e_ik e_jl - e_il e_jk``.
    """
    from .fibers import Monomial

    g = complete(n)
    out = []
    for i, j, k, l in itertools.combinations(range(n), 4):
        def ed(a, b):
            return g.edge_index(a, b)
        hub = Monomial.of([ed(i, l), ed(j, k)])
        out.append(Binomial.make(Monomial.of([ed(i, j), ed(k, l)]), hub))
        out.append(Binomial.make(Monomial.of([ed(i, k), ed(j, l)]), hub))
    return tuple(out)


# -- splitting reports -----------------------------------------------------------------


@dataclass
class SplittingReport:
    g1: Graph
    g2: Graph
    is_splitting: bool
    is_minimal: bool
    is_reduced: bool
    mu_g: int
    mu_g1: int
    mu_g2: int
    edge_witness: EdgeWitness | None = None
    edge_checked: bool = False
    # a smaller pair that still splits, when not reduced
    reduction: tuple[Graph, Graph] | None = field(default=None, repr=False)

    @property
    def is_edge_splitting(self) -> bool:
        return self.edge_witness is not None

    def to_json(self, g: Graph) -> dict:
        missing = lambda h: [g.label(i) for i in g.edge_ids if not h.has_edge(i)]  # noqa: E731
        out = {
            "g1_missing": missing(self.g1),
            "g2_missing": missing(self.g2),
            "splitting": self.is_splitting,
            "edge_splitting": self.edge_witness.to_json(g) if self.edge_witness else None,
            "minimal": self.is_minimal,
            "reduced": self.is_reduced,
            "mu": [self.mu_g1, self.mu_g2, self.mu_g],
        }
        if not self.edge_checked:
            out["edge_splitting"] = "unchecked"
        return out


def _reduction(g: Graph, g1: Graph, g2: Graph):
    """A pair with one edge fewer on one side that still splits, if any."""
    for side, other, first in ((g1, g2, True), (g2, g1, False)):
        used = set()
        for bn in minimal_generating_set(side):
            used |= bn.support
        for f in sorted(used):
            smaller = delete_edges(side, {f})
            if sum_equals_ambient(g, [smaller, other]):
                return (smaller, other) if first else (other, smaller)
    return None


def check_splitting(g: Graph, g1: Graph, g2: Graph, edge_check: bool = True) -> SplittingReport:
    """Classify the pair ``(g1, g2)`` of subgraphs of ``g``.

    Reducedness needs only single-edge removals: removing an edge from a side
    shrinks its ideal only if the edge is used by one of its minimal
    generators, and any strictly smaller splitting pair sits below such a
    single removal on one of the sides.
    """
    for h in (g1, g2):
        if not h.is_subgraph_of(g):
            raise NotSubgraph("both graphs must be subgraphs of the ambient graph")
    proper = not ideal_equals_ambient(g1, g) and not ideal_equals_ambient(g2, g)
    splitting = proper and sum_equals_ambient(g, [g1, g2])
    m, m1, m2 = mu(g), mu(g1), mu(g2)
    minimal = splitting and m1 + m2 == m
    reduction = _reduction(g, g1, g2) if splitting else None
    report = SplittingReport(g1, g2, splitting, minimal, splitting and reduction is None,
                             m, m1, m2, reduction=reduction)
    if splitting and edge_check:
        report.edge_witness = is_edge_splitting(g, g1, g2)
        report.edge_checked = True
    return report


# -- enumeration -------------------------------------------------------------------------


def _ideal_key(g: Graph, edges: frozenset[int]) -> frozenset[int]:
    """Identify ``I_H`` by which primitive walks of ``g`` lie inside ``H``."""
    from .walks import enumerate_primitive_walks

    return frozenset(k for k, w in enumerate(enumerate_primitive_walks(g)) if w.edge_set <= edges)


def subgraph_ideals(g: Graph) -> dict[frozenset[int], frozenset[int]]:
    """Distinct proper nonzero ideals of subgraphs spanned by minimal binomials.

    Subgraphs are all unions of supports of binomials that occur in some
    minimal system; result maps ideal key -> smallest spanning edge set.
    """
    from .walks import enumerate_primitive_walks

    everything = frozenset(range(len(enumerate_primitive_walks(g))))
    supports = sorted({bn.support for bn in minimal_binomials(g)}, key=lambda s: (len(s), sorted(s)))
    cap = errors.BUDGET.candidate_cap
    seen = set(supports)
    todo = list(supports)
    while todo:
        cur = todo.pop()
        for s in supports:
            u = cur | s
            if u not in seen:
                seen.add(u)
                if len(seen) > cap:
                    raise BudgetExceeded(f"more than {cap} candidate subgraphs")
                todo.append(u)
    ideals: dict[frozenset[int], frozenset[int]] = {}
    for edges in sorted(seen, key=lambda s: (len(s), sorted(s))):
        key = _ideal_key(g, edges)
        if key and key != everything and key not in ideals:
            ideals[key] = edges
    return ideals


def enumerate_splittings(g: Graph, edge_check: bool = False) -> list[SplittingReport]:
    """Every splitting by subgraph ideals, up to ideal equality, fully classified."""
    ideals = list(subgraph_ideals(g).values())
    out = []
    for a, b in itertools.combinations(ideals, 2):
        h1, h2 = edge_subgraph(g, a), edge_subgraph(g, b)
        if sum_equals_ambient(g, [h1, h2]):
            out.append(check_splitting(g, h1, h2, edge_check))
    return out


# -- reduced splittings -------------------------------------------------------------------


def reduced_form(g: Graph, g1: Graph, g2: Graph):
    """For a reduced splitting, ``F = E(g) \\ E(g2)`` and ``S`` with
    ``I_{g1} = I_{G_S^F}`` and ``I_{g2} = I_{G\\F}``.

    Returns ``(F, S, G_S^F)``.
    """
    report = check_splitting(g, g1, g2, edge_check=False)
    if not report.is_splitting:
        raise NotASplitting("the pair does not split the ideal")
    if not report.is_reduced:
        raise NotReduced("a smaller pair of subgraphs gives the same sum")
    F = frozenset(g.edge_ids) - frozenset(g2.edge_ids)
    e1, e2 = frozenset(g1.edge_ids), frozenset(g2.edge_ids)
    system: list[Binomial] = []
    for fb in generator_fibers(g):
        comp = {m: k for k, c in enumerate(fb.components) for m in c}
        parent = list(range(len(fb.components)))

        def find(i):
            while parent[i] != i:
                i = parent[i]
            return i

        pairs = []
        for side in (e2, e1):
            for m, m2 in itertools.combinations(fb.monomials, 2):
                if comp[m] != comp[m2] and (m.support | m2.support) <= side:
                    pairs.append((m, m2))
        for m, m2 in pairs:
            a, b = find(comp[m]), find(comp[m2])
            if a != b:
                parent[a] = b
                system.append(Binomial.make(m, m2))
    rest = delete_edges(g, F)
    h = g_s_F(g, system, F, check=False)
    if not (generates(g, system) and len(system) == report.mu_g):
        raise ClosedFormViolation("generators of the two sides do not contain a minimal system")
    if not (ideal_contained(h, g1) and ideal_contained(g1, h)
            and ideal_contained(rest, g2) and ideal_contained(g2, rest)):
        raise ClosedFormViolation("reduced splitting is not realised by G_S^F and G\\F")
    return F, tuple(system), h


# -- complete graphs and wheels ---------------------------------------------------------


def _vertex_pair(g: Graph, e: int) -> frozenset[int]:
    return frozenset(g.edge(e))


def kn_classify(n: int, g1: Graph, g2: Graph):
    """Shape of a splitting of ``K_n``: which 4-cycle ``(a, b, c, d)`` and type 1-4.

    Types: ``K\\a + K\\b`` (1), ``K\\{a,c} + K\\b`` (2), ``K\\a + K\\{b,d}`` (3),
    ``K\\{a,c} + K\\{b,d}`` (4).  Returns ``(type, (a, b, c, d))``.
    """
    g = complete(n)
    if not check_splitting(g, g1, g2, edge_check=False).is_splitting:
        raise NotASplitting("the pair does not split the ideal of K_n")
    m1 = [e for e in g.edge_ids if not g1.has_edge(e)]
    m2 = [e for e in g.edge_ids if not g2.has_edge(e)]
    if not (1 <= len(m1) <= 2 and 1 <= len(m2) <= 2):
        raise NoMatchingType(f"missing edge sets of sizes {len(m1)} and {len(m2)}")
    p1 = [_vertex_pair(g, e) for e in m1]
    p2 = [_vertex_pair(g, e) for e in m2]
    for side in (p1, p2):
        if len(side) == 2 and side[0] & side[1]:
            raise NoMatchingType("two missing edges of one side share a vertex")
    for x in p1:
        for y in p2:
            if len(x & y) != 1:
                raise NoMatchingType("a missing edge of one side is not adjacent to one of the other")
    a, b = p1[0], p2[0]
    (shared,) = a & b
    x = next(iter(a - {shared}))
    z = next(iter(b - {shared}))
    if len(p1) == 2:
        c = p1[1]
        t = next(iter(c - {z}))
    elif len(p2) == 2:
        d = p2[1]
        t = next(iter(d - {x}))
    else:
        t = min(set(range(n)) - {x, shared, z})
    c, d = frozenset({z, t}), frozenset({t, x})
    if (len(p1) == 2 and p1[1] != c) or (len(p2) == 2 and p2[1] != d):
        raise NoMatchingType("missing edges do not close a 4-cycle")
    kind = {(1, 1): 1, (2, 1): 2, (1, 2): 3, (2, 2): 4}[(len(p1), len(p2))]
    cyc = tuple(g.edge_index(*sorted(p)) for p in (a, b, c, d))
    return kind, cyc


def kn_candidate_pairs(n: int):
    """All pairs of the four 4-cycle shapes in ``K_n``, deduplicated."""
    g = complete(n)
    seen = set()
    for cyc in itertools.permutations(range(n), 4):
        if cyc[0] != min(cyc):
            continue
        a, b, c, d = (g.edge_index(cyc[k], cyc[(k + 1) % 4]) for k in range(4))
        for s1, s2 in (({a}, {b}), ({a, c}, {b}), ({a}, {b, d}), ({a, c}, {b, d})):
            key = frozenset([frozenset(s1), frozenset(s2)])
            if key in seen:
                continue
            seen.add(key)
            yield delete_edges(g, s1), delete_edges(g, s2)


def kn_minimal_splittings(n: int) -> list[SplittingReport]:
    """Minimal splittings of ``K_n`` among all 4-cycle shaped candidates."""
    g = complete(n)
    target = mu(g)
    out = []
    for g1, g2 in kn_candidate_pairs(n):
        if mu(g1) + mu(g2) != target:
            continue
        rep = check_splitting(g, g1, g2, edge_check=False)
        if rep.is_minimal:
            out.append(rep)
    return out


def kn_has_minimal_splitting(n: int, verify_up_to: int = 6) -> bool:
    """``K_n`` has a minimal splitting exactly for ``n`` in 4..5."""
    closed = 4 <= n <= 5
    if n <= verify_up_to and n >= 4:
        found = bool(kn_minimal_splittings(n))
        if found != closed:
            raise ClosedFormViolation(f"K_{n}: search says {found}, classification says {closed}")
    return closed


def wheel_splittable(rim: int, verify_up_to: int = 8) -> bool:
    """The wheel with ``rim`` rim vertices splits iff ``rim == 4`` or ``rim`` is odd."""
    if rim < 3:
        raise GraphError("a wheel needs at least 3 rim vertices")
    closed = rim == 4 or rim % 2 == 1
    if rim <= verify_up_to:
        found = is_subgraph_splittable(wheel(rim))
        if found != closed:
            raise ClosedFormViolation(f"wheel rim {rim}: search says {found}, classification says {closed}")
    return closed
