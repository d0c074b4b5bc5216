"""Monomials, binomials and fibers of the edge ring, plus generation tests.

A monomial in the edge variables is a sorted tuple of edge indices with
repetition, e.g. ``(0, 0, 5)`` is ``e1^2 e6``.  The fiber of a vertex degree
``b`` is the set of all such monomials whose vertex degree is ``b``.  Within a
fiber, two monomials are linked when they share a variable; the connected
components of that relation decide everything about minimal generators:

* the ideal needs a generator in degree ``b`` iff the fiber is disconnected;
* a binomial ``m - m'`` of the fiber is minimal iff ``m`` and ``m'`` lie in
  different components;
* the number of minimal generators in degree ``b`` is ``components - 1``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod

from . import errors
from .errors import BudgetExceeded, GraphError, NotSubgraph
from .graph import Graph

Degree = tuple[int, ...]


# -- monomials and binomials ----------------------------------------------------


@dataclass(frozen=True, order=True)
class Monomial:
    edges: tuple[int, ...] = ()

    @classmethod
    def of(cls, edges) -> "Monomial":
        return cls(tuple(sorted(edges)))

    @property
    def exponents(self) -> Counter:
        return Counter(self.edges)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.edges)

    @property
    def total_degree(self) -> int:
        return len(self.edges)

    def divides(self, other: "Monomial") -> bool:
        return not (self.exponents - other.exponents)

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial.of((self.exponents & other.exponents).elements())

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial.of(self.edges + other.edges)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        rest = self.exponents
        rest.subtract(other.exponents)
        if any(c < 0 for c in rest.values()):
            raise ValueError("monomial division is not exact")
        return Monomial.of(rest.elements())

    def format(self, g: Graph) -> str:
        if not self.edges:
            return "1"
        parts = []
        for e, k in sorted(self.exponents.items()):
            parts.append(g.label(e) if k == 1 else f"{g.label(e)}^{k}")
        return "*".join(parts)


@dataclass(frozen=True, order=True)
class Binomial:
    """A gcd-free binomial ``plus - minus`` with ``plus`` the smaller term.

    Sign is not tracked: a binomial and its negative are the same generator.
    """

    plus: Monomial
    minus: Monomial

    @classmethod
    def make(cls, a: Monomial, b: Monomial) -> "Binomial":
        common = a.gcd(b)
        a, b = a / common, b / common
        if a == b:
            raise ValueError("binomial is zero")
        if b < a:
            a, b = b, a
        return cls(a, b)

    @property
    def support(self) -> frozenset[int]:
        return self.plus.support | self.minus.support

    def format(self, g: Graph) -> str:
        return f"{self.plus.format(g)} - {self.minus.format(g)}"

    def to_json(self, g: Graph) -> dict:
        return {
            "plus": [g.label(e) for e in self.plus.edges],
            "minus": [g.label(e) for e in self.minus.edges],
            "text": self.format(g),
        }


def a_degree(g: Graph, m: Monomial | tuple[int, ...]) -> Degree:
    """Vertex degree of a monomial: how often each vertex is hit."""
    edges = m.edges if isinstance(m, Monomial) else m
    b = [0] * g.n
    for e in edges:
        u, v = g.edge(e)
        b[u] += 1
        b[v] += 1
    return tuple(b)


def binomial_degree(g: Graph, bn: Binomial) -> Degree:
    return a_degree(g, bn.plus)


def in_ideal(g: Graph, bn: Binomial) -> bool:
    """Whether a binomial in the edge variables of ``g`` lies in its toric ideal."""
    for e in bn.support:
        if not g.has_edge(e):
            return False
    return a_degree(g, bn.plus) == a_degree(g, bn.minus)


# -- fibers ---------------------------------------------------------------------


@dataclass(frozen=True)
class Fiber:
    degree: Degree
    monomials: tuple[Monomial, ...]
    # gcd-components in reverse lexicographic order, ordered by their least monomial
    components: tuple[tuple[Monomial, ...], ...]

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    @property
    def mu(self) -> int:
        return max(len(self.components) - 1, 0)

    def component_of(self, m: Monomial) -> int:
        for k, comp in enumerate(self.components):
            if m in comp:
                return k
        raise ValueError("monomial not in fiber")


@lru_cache(maxsize=None)
def _incidence(g: Graph) -> tuple[tuple[tuple[int, int], ...], ...]:
    inc = g.incidence()
    return tuple(tuple(inc.get(v, ())) for v in range(g.n))


def _fiber_monomials(g: Graph, b: Degree, cap: int) -> list[tuple[int, ...]]:
    """All monomials of vertex degree ``b``, vertex by vertex.

    At the lowest vertex with unmet degree, its whole remaining degree is
    distributed over edges to vertices that still need degree.
    """
    if len(b) != g.n or any(x < 0 for x in b):
        raise GraphError("degree vector has the wrong shape")
    if any(b[v] and v not in g.vertex_set for v in range(g.n)) or sum(b) % 2:
        return []
    inc = _incidence(g)
    rem = list(b)
    chosen: list[int] = []
    out: list[tuple[int, ...]] = []

    def next_vertex(start: int) -> int:
        for v in range(start, g.n):
            if rem[v]:
                return v
        return -1

    def place(v: int, start: int) -> None:
        v = next_vertex(start)
        if v < 0:
            out.append(tuple(sorted(chosen)))
            if len(out) > cap:
                raise BudgetExceeded(f"fiber of degree {b} exceeds {cap} monomials")
            return
        nbrs = [(e, u) for e, u in inc[v] if rem[u] > 0]
        if sum(rem[u] for _, u in nbrs) < rem[v]:
            return
        need = rem[v]
        rem[v] = 0
        spread(v, nbrs, 0, need)
        rem[v] = need

    def spread(v: int, nbrs, k: int, left: int) -> None:
        if left == 0:
            place(v, v + 1)
            return
        if k == len(nbrs):
            return
        e, u = nbrs[k]
        capacity = sum(rem[w] for _, w in nbrs[k + 1:])
        top = min(left, rem[u])
        for x in range(top, max(left - capacity, 0) - 1, -1):
            rem[u] -= x
            chosen.extend([e] * x)
            spread(v, nbrs, k + 1, left - x)
            del chosen[len(chosen) - x:]
            rem[u] += x

    place(0, 0)
    return sorted(set(out))


def revlex_key(m) -> tuple[int, ...]:
    """Sort key for monomials of one degree: reverse lexicographic order.

    With ``e1 > e2 > ...``, the smaller monomial is the one with the larger
    exponent in the last variable where the two differ.
    """
    edges = m.edges if isinstance(m, Monomial) else m
    return tuple(-e for e in sorted(edges, reverse=True))


def gcd_components(monomials) -> list[list]:
    """Group monomials (edge tuples) into components of the shares-a-variable relation."""
    monomials = list(monomials)
    parent = list(range(len(monomials)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict[int, int] = {}
    for i, m in enumerate(monomials):
        for e in set(m):
            if e in owner:
                a, c = find(i), find(owner[e])
                if a != c:
                    parent[max(a, c)] = min(a, c)
            else:
                owner[e] = i
    groups: dict[int, list] = {}
    for i, m in enumerate(monomials):
        groups.setdefault(find(i), []).append(m)
    comps = [sorted(grp, key=revlex_key) for grp in groups.values()]
    comps.sort(key=lambda c: revlex_key(c[0]))
    return comps


@lru_cache(maxsize=4096)
def enumerate_fiber(g: Graph, b: Degree) -> Fiber:
    """The fiber of degree ``b`` with its gcd-components."""
    b = tuple(b)
    raw = _fiber_monomials(g, b, errors.BUDGET.fiber_cap)
    comps = gcd_components(raw)
    return Fiber(
        degree=b,
        monomials=tuple(Monomial(m) for m in raw),
        components=tuple(tuple(Monomial(m) for m in c) for c in comps),
    )


def is_primitive(g: Graph, bn: Binomial) -> bool:
    """No other binomial of the ideal has terms dividing both terms of ``bn``.

    Equivalently, no pair of proper divisors ``u | plus``, ``v | minus``
    other than ``(1, 1)`` and ``(plus, minus)`` share a vertex degree.
    """
    if not in_ideal(g, bn):
        return False

    def divisor_degrees(m: Monomial) -> dict[Degree, list[tuple[int, ...]]]:
        items = sorted(m.exponents.items())
        found: dict[Degree, list] = {}
        for ks in itertools.product(*(range(k + 1) for _, k in items)):
            d = tuple(e for (e, _), k in zip(items, ks) for _ in range(k))
            found.setdefault(a_degree(g, d), []).append(d)
        return found

    left = divisor_degrees(bn.plus)
    right = divisor_degrees(bn.minus)
    full = len(bn.plus.edges)
    for deg, us in left.items():
        if deg not in right:
            continue
        for u in us:
            for v in right[deg]:
                if 0 < len(u) < full or 0 < len(v) < len(bn.minus.edges):
                    return False
    return True


# -- minimal generators -----------------------------------------------------------


@lru_cache(maxsize=256)
def generator_degrees(g: Graph) -> tuple[Degree, ...]:
    """Candidate degrees for minimal generators: degrees of bridgeless primitive walks."""
    from .walks import enumerate_bridgeless_walks

    degs = {a_degree(g, w.odd_monomial) for w in enumerate_bridgeless_walks(g)}
    return tuple(sorted(degs, key=lambda d: (sum(d), d)))


@lru_cache(maxsize=256)
def generator_fibers(g: Graph) -> tuple[Fiber, ...]:
    """Disconnected fibers, ordered by total degree then degree vector."""
    out = []
    for b in generator_degrees(g):
        fb = enumerate_fiber(g, b)
        if not fb.is_connected:
            out.append(fb)
    return tuple(out)


@dataclass(frozen=True)
class MinimalSystem:
    binomials: tuple[Binomial, ...]
    fibers: tuple[Fiber, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.binomials)

    def __iter__(self):
        return iter(self.binomials)

    def by_degree(self, g: Graph) -> dict[Degree, list[Binomial]]:
        out: dict[Degree, list[Binomial]] = {}
        for bn in self.binomials:
            out.setdefault(binomial_degree(g, bn), []).append(bn)
        return out

    def format(self, g: Graph) -> list[str]:
        return [bn.format(g) for bn in self.binomials]


def canonical_selection(fb: Fiber) -> list[Binomial]:
    """Star tree: least monomial of the first component to each other component's least."""
    hub = fb.components[0][0]
    return [Binomial.make(hub, comp[0]) for comp in fb.components[1:]]


@lru_cache(maxsize=256)
def minimal_generating_set(g: Graph) -> MinimalSystem:
    """A deterministic minimal system of binomial generators."""
    fibers = generator_fibers(g)
    binomials = []
    for fb in fibers:
        binomials.extend(canonical_selection(fb))
    return MinimalSystem(tuple(binomials), fibers)


def mu(g: Graph) -> int:
    """Number of minimal generators (an invariant of the ideal)."""
    return sum(fb.mu for fb in generator_fibers(g))


def count_minimal_systems(g: Graph) -> int:
    """How many distinct minimal binomial systems exist (sign ignored).

    A minimal system picks, in every disconnected fiber, a spanning tree on the
    components and one monomial per tree end; counting trees with given vertex
    weights gives ``(sum s)^(c-2) * prod s`` for components of sizes ``s``.
    """
    total = 1
    for fb in generator_fibers(g):
        sizes = [len(c) for c in fb.components]
        total *= sum(sizes) ** (len(sizes) - 2) * prod(sizes)
    return total


def _prufer_tree(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return edges


def spanning_selections(fb: Fiber, cap: int | None = None):
    """Every minimal binomial system of one fiber, as lists of binomials."""
    cap = errors.BUDGET.selection_cap if cap is None else cap
    c = len(fb.components)
    if c <= 1:
        yield []
        return
    trees = [[(0, 1)]] if c == 2 else (
        _prufer_tree(seq, c) for seq in itertools.product(range(c), repeat=c - 2))
    count = 0
    for tree in trees:
        for ends in itertools.product(
                *(itertools.product(fb.components[a], fb.components[b]) for a, b in tree)):
            count += 1
            if count > cap:
                raise BudgetExceeded(f"more than {cap} minimal selections in one fiber")
            yield [Binomial.make(m, m2) for m, m2 in ends]


def minimal_binomials(g: Graph) -> frozenset[Binomial]:
    """Every binomial that belongs to some minimal system."""
    out = set()
    for fb in generator_fibers(g):
        for a, b in itertools.combinations(fb.components, 2):
            for m in a:
                for m2 in b:
                    out.add(Binomial.make(m, m2))
    return frozenset(out)


def indispensable_binomials(g: Graph) -> frozenset[Binomial]:
    """Binomials present in every minimal system: fibers with two singletons."""
    return frozenset(
        Binomial.make(fb.components[0][0], fb.components[1][0])
        for fb in generator_fibers(g)
        if len(fb.components) == 2 and all(len(c) == 1 for c in fb.components))


def indispensable_monomials(g: Graph) -> frozenset[Monomial]:
    """Monomials appearing in every minimal system: singleton components."""
    return frozenset(c[0] for fb in generator_fibers(g) for c in fb.components if len(c) == 1)


# -- ideal comparisons in a common ambient graph -------------------------------------


def _edges(h: Graph) -> frozenset[int]:
    return frozenset(h.edge_ids)


def _check_sub(h: Graph, g: Graph) -> None:
    if not h.is_subgraph_of(g):
        raise NotSubgraph("graph is not a subgraph of the ambient graph")


def binomial_in_subgraph_ideal(bn: Binomial, h: Graph, g: Graph | None = None) -> bool:
    """Membership of an ideal binomial in the ideal of a subgraph ``h``.

    Any gcd-free binomial of the ambient ideal lies in ``I_h`` exactly when
    all its variables are edges of ``h``.
    """
    if g is not None:
        _check_sub(h, g)
        if not in_ideal(g, bn):
            raise ValueError("binomial is not in the ambient ideal")
    return bn.support <= _edges(h)


def ideal_contained(h1: Graph, h2: Graph) -> bool:
    """``I_h1 ⊆ I_h2`` for two graphs sharing an edge table."""
    e2 = _edges(h2)
    return all(bn.support <= e2 for bn in minimal_generating_set(h1))


def ideals_equal(h1: Graph, h2: Graph) -> bool:
    return ideal_contained(h1, h2) and ideal_contained(h2, h1)


def ideal_equals_ambient(h: Graph, g: Graph) -> bool:
    """``I_h == I_g`` for a subgraph ``h`` of ``g``.

    Equal iff every component of every disconnected fiber of ``g`` contains a
    monomial using only edges of ``h``.
    """
    _check_sub(h, g)
    eh = _edges(h)
    for fb in generator_fibers(g):
        for comp in fb.components:
            if not any(m.support <= eh for m in comp):
                return False
    return True


def sum_equals_ambient(g: Graph, parts) -> bool:
    """``I_h1 + ... + I_hk == I_g`` for subgraphs ``h_i`` of ``g``.

    Within a fiber, a move by a binomial of ``I_h`` joins exactly the
    monomials that agree outside ``E(h)``; the sum is the whole ideal iff
    those moves connect every disconnected fiber of ``g``.
    """
    parts = list(parts)
    for h in parts:
        _check_sub(h, g)
    edge_sets = [_edges(h) for h in parts]
    for fb in generator_fibers(g):
        mons = fb.monomials
        parent = list(range(len(mons)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for eh in edge_sets:
            seen: dict[tuple[int, ...], int] = {}
            for i, m in enumerate(mons):
                key = tuple(e for e in m.edges if e not in eh)
                if key in seen:
                    a, c = find(i), find(seen[key])
                    parent[a] = c
                else:
                    seen[key] = i
        if len({find(i) for i in range(len(mons))}) > 1:
            return False
    return True


def generates(g: Graph, binomials) -> bool:
    """Whether the binomials generate the toric ideal of ``g``.

    Each binomial acts on a fiber by replacing one term with the other
    wherever it divides; the set generates iff every disconnected fiber becomes
    a single class.
    """
    moves = []
    for bn in binomials:
        if not in_ideal(g, bn):
            return False
        moves.append((bn.plus.exponents, bn.minus.exponents))
    for fb in generator_fibers(g):
        index = {m: i for i, m in enumerate(fb.monomials)}
        parent = list(range(len(fb.monomials)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i, m in enumerate(fb.monomials):
            exps = m.exponents
            for a, b in moves:
                for src, dst in ((a, b), (b, a)):
                    if not (src - exps):
                        moved = exps - src + dst
                        j = index[Monomial.of(moved.elements())]
                        ri, rj = find(i), find(j)
                        if ri != rj:
                            parent[ri] = rj
        if len({find(i) for i in range(len(fb.monomials))}) > 1:
            return False
    return True


def clear_caches() -> None:
    """Forget every memoised fiber and walk computation."""
    from . import walks

    for fn in (_incidence, enumerate_fiber, generator_degrees, generator_fibers,
               minimal_generating_set, walks._primitive_walks, walks._walk_blocks,
               walks._edge_lookup):
        fn.cache_clear()
