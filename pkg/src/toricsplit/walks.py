"""Closed even walks, primitive-walk enumeration and chord analysis.

A closed even walk ``(e_1, ..., e_2q)`` gives the binomial
``e_1 e_3 ... e_{2q-1} - e_2 e_4 ... e_2q``.  The walks whose binomial is
primitive have a rigid shape: their edges form a connected graph whose blocks
are cycles or single edges, each cut vertex lies on exactly two blocks, and
either the whole thing is one even cycle or every cut vertex has an odd number
of odd cycles on each side.  Those shapes are enumerated directly below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from . import errors
from .errors import BudgetExceeded, ChordNotOdd, NotAChord, WalkError
from .fibers import Binomial, Monomial, is_primitive
from .graph import Graph, blocks


# -- walks -------------------------------------------------------------------------


@lru_cache(maxsize=64)
def _edge_lookup(g: Graph) -> dict[tuple[int, int], int]:
    return {g.slots[i]: i for i in g.edge_ids}


def _edge_between(g: Graph, u: int, v: int) -> int:
    i = _edge_lookup(g).get((min(u, v), max(u, v)))
    if i is None:
        raise WalkError(f"no edge between {u + 1} and {v + 1}")
    return i


@dataclass(frozen=True)
class Walk:
    """Closed walk: edge ``edges[k]`` joins ``vertices[k]`` and ``vertices[k+1]`` (cyclically)."""

    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    @classmethod
    def from_vertices(cls, g: Graph, vertices) -> "Walk":
        vs = tuple(vertices)
        if len(vs) < 2 or len(vs) % 2:
            raise WalkError("a closed even walk needs an even number (>= 2) of steps")
        es = tuple(_edge_between(g, vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs)))
        return cls(es, vs)

    @classmethod
    def from_edges(cls, g: Graph, edges) -> "Walk":
        es = tuple(edges)
        if len(es) < 2 or len(es) % 2:
            raise WalkError("a closed even walk needs an even number (>= 2) of edges")
        for e in es:
            if not g.has_edge(e):
                raise WalkError(f"edge index {e} is not in the graph")
        first, last = g.edge(es[0]), g.edge(es[-1])
        for start in first:
            vs = [start]
            ok = True
            for e in es:
                u, v = g.edge(e)
                if vs[-1] == u:
                    vs.append(v)
                elif vs[-1] == v:
                    vs.append(u)
                else:
                    ok = False
                    break
            if ok and vs[-1] == start:
                return cls(es, tuple(vs[:-1]))
        raise WalkError("edges do not form a closed walk")

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def odd_edges(self) -> tuple[int, ...]:
        return self.edges[0::2]

    @property
    def even_edges(self) -> tuple[int, ...]:
        return self.edges[1::2]

    @property
    def odd_monomial(self) -> Monomial:
        return Monomial.of(self.odd_edges)

    @property
    def even_monomial(self) -> Monomial:
        return Monomial.of(self.even_edges)

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def binomial(self) -> Binomial:
        return Binomial.make(self.odd_monomial, self.even_monomial)

    def canonical(self) -> "Walk":
        """Least representative under rotations and reversal.

        Odd rotations swap the two parity classes, i.e. negate the binomial;
        since generators are taken up to sign, all rotations are allowed.
        """
        n = len(self.edges)
        rev_e = self.edges[::-1]
        rev_v = (self.vertices[0],) + self.vertices[:0:-1]
        best = None
        for es, vs in ((self.edges, self.vertices), (rev_e, rev_v)):
            for k in range(n):
                cand = (es[k:] + es[:k], vs[k:] + vs[:k])
                if best is None or cand < best:
                    best = cand
        return Walk(*best)

    def format(self, g: Graph) -> str:
        return "(" + ", ".join(g.label(e) for e in self.edges) + ")"

    def to_json(self, g: Graph) -> dict:
        return {
            "edges": [g.label(e) for e in self.edges],
            "vertices": [v + 1 for v in self.vertices],
        }


# -- cycles ----------------------------------------------------------------------


def simple_cycles(g: Graph, max_len: int | None = None) -> list[tuple[int, ...]]:
    """Every simple cycle (length >= 3) as a vertex tuple, each listed once.

    Cycles are rooted at their least vertex and listed in the direction whose
    second vertex is smaller than the last.
    """
    adj = {v: sorted(u for _, u in nbrs) for v, nbrs in g.incidence().items()}
    limit = max_len if max_len is not None else len(g.vertex_set)
    out = []
    for s in sorted(adj):
        path = [s]
        on_path = {s}
        stack = [iter([u for u in adj[s] if u > s])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if len(path) < limit:
                path.append(nxt)
                on_path.add(nxt)
                if len(path) >= 3 and s in adj[nxt] and path[1] < path[-1]:
                    out.append(tuple(path))
                stack.append(iter([u for u in adj[nxt] if u > s and u not in on_path]))
    return out


def _cycle_edges(g: Graph, cyc: tuple[int, ...]) -> frozenset[int]:
    return frozenset(_edge_between(g, cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc)))


def enumerate_even_cycles(g: Graph, max_len: int | None = None) -> list[Walk]:
    out = []
    for cyc in simple_cycles(g, max_len):
        if len(cyc) % 2 == 0:
            out.append(Walk.from_vertices(g, cyc).canonical())
    out.sort(key=lambda w: (len(w), w.edges))
    return out


# -- cacti: shapes of primitive walks -------------------------------------------


@dataclass(frozen=True)
class _Block:
    vertices: tuple[int, ...]  # cyclic order for cycles, the two ends for a bridge
    edges: frozenset[int]
    is_cycle: bool

    @property
    def odd(self) -> bool:
        return self.is_cycle and len(self.vertices) % 2 == 1


def _cactus_is_valid(blist: list[_Block]) -> bool:
    where: dict[int, list[int]] = {}
    for k, b in enumerate(blist):
        for v in b.vertices:
            where.setdefault(v, []).append(k)
    # a bridge end on no other block is a dead end
    for b in blist:
        if not b.is_cycle and any(len(where[v]) < 2 for v in b.vertices):
            return False
    n_odd = sum(b.odd for b in blist)
    if n_odd % 2:
        return False
    # every cut vertex must see an odd number of odd cycles on each side
    tree: dict[int, list[int]] = {k: [] for k in range(len(blist))}
    for v, ks in where.items():
        if len(ks) == 2:
            a, c = ks
            tree[a].append(c)
            tree[c].append(a)
    for v, ks in where.items():
        if len(ks) != 2:
            continue
        a, c = ks
        seen = {a}
        todo = [a]
        while todo:
            x = todo.pop()
            for y in tree[x]:
                if y not in seen and not {x, y} == {a, c}:
                    seen.add(y)
                    todo.append(y)
        if sum(blist[k].odd for k in seen) % 2 == 0:
            return False
    return True


def _cactus_walk(g: Graph, blist: list[_Block]) -> Walk:
    where: dict[int, list[int]] = {}
    for k, b in enumerate(blist):
        for v in b.vertices:
            where.setdefault(v, []).append(k)

    def other(k: int, v: int) -> int | None:
        ks = [j for j in where[v] if j != k]
        return ks[0] if ks else None

    def excursion(k: int, x: int) -> list[int]:
        """Vertices visited after ``x`` while touring block ``k`` and beyond, ending at ``x``."""
        b = blist[k]
        seq: list[int] = []
        if b.is_cycle:
            i = b.vertices.index(x)
            order = b.vertices[i:] + b.vertices[:i]
            for v in order[1:]:
                seq.append(v)
                j = other(k, v)
                if j is not None:
                    seq.extend(excursion(j, v))
            seq.append(x)
        else:
            u = b.vertices[1] if b.vertices[0] == x else b.vertices[0]
            seq.append(u)
            j = other(k, u)
            seq.extend(excursion(j, u))
            seq.append(x)
        return seq

    root = 0
    x = blist[root].vertices[0]
    seq = [x] + excursion(root, x)
    j = other(root, x)
    if j is not None:
        seq.extend(excursion(j, x))
    return Walk.from_vertices(g, seq[:-1])


def enumerate_primitive_walks(g: Graph) -> list[Walk]:
    """All primitive walks of ``g`` in canonical form, shortest first."""
    return list(_primitive_walks(g, False))


def enumerate_bridgeless_walks(g: Graph) -> list[Walk]:
    """Primitive walks with no chord joining two different blocks of the walk.

    Blocks of a partial shape never merge as it grows, so a chord that joins
    two blocks stays that way; such shapes are pruned early.  These are the
    only walks that can give minimal generators.
    """
    return list(_primitive_walks(g, True))


def _submasks(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


@lru_cache(maxsize=256)
def _primitive_walks(g: Graph, prune_bridges: bool) -> tuple[Walk, ...]:
    budget = errors.BUDGET
    max_len = budget.walk_cap(g.num_edges)
    cyc_blocks = [_Block(c, _cycle_edges(g, c), True) for c in simple_cycles(g, max_len)]
    found: dict[frozenset[int], Walk] = {}

    for b in cyc_blocks:
        if not b.odd:
            w = Walk.from_vertices(g, b.vertices).canonical()
            found[w.edge_set] = w

    odd_blocks = [b for b in cyc_blocks if b.odd]
    if len(odd_blocks) < 2:
        return tuple(sorted(found.values(), key=lambda w: (len(w), w.edges)))

    def bits(vs) -> int:
        m = 0
        for v in vs:
            m |= 1 << v
        return m

    # cycles indexed by (vertex, vertex mask) and by vertex
    by_mask: dict[tuple[int, int], list[_Block]] = {}
    by_vertex: dict[int, list[tuple[int, _Block]]] = {}
    for b in cyc_blocks:
        m = bits(b.vertices)
        for v in b.vertices:
            by_mask.setdefault((v, m), []).append(b)
            by_vertex.setdefault(v, []).append((m, b))
    inc = g.incidence()
    nbr_mask = {v: bits(u for _, u in inc[v]) for v in inc}
    all_mask = bits(g.vertex_set)

    def fits(c: _Block, v: int, others: int) -> bool:
        """Attaching ``c`` at ``v`` creates no chord between blocks."""
        return not any(nbr_mask[y] & others for y in c.vertices if y != v)

    seen: set[frozenset[int]] = set()
    todo = []
    for b in odd_blocks:
        if b.edges not in seen:
            seen.add(b.edges)
            todo.append(([b], b.edges, len(b.vertices)))
    states = 0
    while todo:
        blist, key, length = todo.pop()
        states += 1
        if states > budget.candidate_cap:
            raise BudgetExceeded(f"more than {budget.candidate_cap} walk candidates")
        if len(blist) > 1 and _cactus_is_valid(blist):
            w = _cactus_walk(g, blist).canonical()
            if w.edge_set not in found and is_primitive(g, w.binomial()):
                found[w.edge_set] = w
        count: dict[int, int] = {}
        for b in blist:
            for v in b.vertices:
                count[v] = count.get(v, 0) + 1
        used = bits(count)
        room = max_len - length
        for v in sorted(count):
            if count[v] != 1:
                continue
            others = used & ~(1 << v)
            free = all_mask & ~used
            if free.bit_count() <= 12:
                cands = [c for sub in _submasks(free) for c in by_mask.get((v, sub | (1 << v)), ())]
            else:
                cands = [c for m, c in by_vertex.get(v, ()) if not m & others]
            for c in cands:
                if len(c.vertices) > room or (prune_bridges and not fits(c, v, others)):
                    continue
                new_key = key | c.edges
                if new_key not in seen:
                    seen.add(new_key)
                    todo.append((blist + [c], new_key, length + len(c.vertices)))
            if room < 2:
                continue
            for e, u in inc[v]:
                if used >> u & 1:
                    continue
                c = _Block((v, u), frozenset([e]), False)
                if prune_bridges and not fits(c, v, others):
                    continue
                new_key = key | c.edges
                if new_key not in seen:
                    seen.add(new_key)
                    todo.append((blist + [c], new_key, length + 2))
    return tuple(sorted(found.values(), key=lambda w: (len(w), w.edges)))


# -- chords ----------------------------------------------------------------------


@dataclass(frozen=True)
class ChordClass:
    kind: str  # "bridge", "even" or "odd"
    # for odd chords: the two odd closed walks obtained by splitting at the chord
    pieces: tuple[tuple[int, ...], ...] = ()

    @property
    def is_odd(self) -> bool:
        return self.kind == "odd"


def chords(g: Graph, w: Walk) -> list[int]:
    vs = w.vertex_set
    used = w.edge_set
    return [e for e in g.edge_ids if e not in used and set(g.edge(e)) <= vs]


@lru_cache(maxsize=1024)
def _walk_blocks(g: Graph, w: Walk):
    return blocks(g.restrict(w.edge_set))


def _positions(w: Walk, v: int) -> list[int]:
    return [k for k, x in enumerate(w.vertices) if x == v]


def classify_chord(g: Graph, w: Walk, f: int) -> ChordClass:
    """Bridge, even or odd chord of ``w``.

    A chord joining two blocks of the walk is a bridge.  Otherwise it splits the
    walk into two closed walks through the chord; it is even if some way of
    splitting makes both even, and odd when every split gives two odd walks.
    """
    if not g.has_edge(f) or f in w.edge_set or not set(g.edge(f)) <= w.vertex_set:
        raise NotAChord(f"edge {g.label(f) if g.has_edge(f) else f} is not a chord of the walk")
    a, b = g.edge(f)
    bd = _walk_blocks(g, w)
    vert_sets = [{x for e in blk for x in g.edge(e)} for blk in bd.blocks]
    if not any(a in vs and b in vs for vs in vert_sets):
        return ChordClass("bridge")
    n = len(w)
    for i in _positions(w, a):
        for j in _positions(w, b):
            if (j - i) % 2:
                return ChordClass("even")
    i, j = sorted((_positions(w, a)[0], _positions(w, b)[0]))
    inner = w.edges[i:j] + (f,)
    outer = w.edges[j:] + w.edges[:i] + (f,)
    assert len(inner) % 2 == 1 and len(outer) % 2 == 1 and len(inner) + len(outer) == n + 2
    return ChordClass("odd", (inner, outer))


def _ends(g: Graph, w: Walk, f: int) -> tuple[int, int]:
    a, b = g.edge(f)
    return tuple(sorted((_positions(w, a)[0], _positions(w, b)[0])))


def _effective(g: Graph, w: Walk, f: int, f2: int) -> bool:
    i, j = _ends(g, w, f)
    k, l = _ends(g, w, f2)
    interleave = i < k < j < l or k < i < l < j
    return interleave and (k - i) % 2 == 1


def _is_f4(g: Graph, w: Walk, f: int, f2: int) -> bool:
    a, b = g.edge(f)
    c, d = g.edge(f2)
    if len({a, b, c, d}) < 4:
        return False
    odd = set(w.odd_edges)
    even = set(w.even_edges)
    lookup = _edge_lookup(g)
    for (x, y), (x2, y2) in (((a, c), (b, d)), ((a, d), (b, c))):
        e1 = lookup.get((min(x, y), max(x, y)))
        e2 = lookup.get((min(x2, y2), max(x2, y2)))
        if e1 is None or e2 is None or e1 == e2:
            continue
        if (e1 in odd and e2 in odd) or (e1 in even and e2 in even):
            return True
    return False


def crossing_kind(g: Graph, w: Walk, f: int, f2: int) -> str:
    """How two odd chords interact: ``"none"``, ``"effective"`` or ``"f4"``.

    Odd chords cross effectively when their ends interleave along the walk at
    an odd offset.  An effective crossing whose four ends are also joined by
    two walk edges of the same parity closes a 4-cycle and is reported as
    ``"f4"``; any other effective crossing is strongly effective.
    """
    if f == f2:
        raise ChordNotOdd("the two chords must be distinct")
    for e in (f, f2):
        if not classify_chord(g, w, e).is_odd:
            raise ChordNotOdd(f"{g.label(e)} is not an odd chord")
    if not _effective(g, w, f, f2):
        return "none"
    return "f4" if _is_f4(g, w, f, f2) else "effective"


def sinks(g: Graph, w: Walk) -> dict[int, list[int]]:
    """Per cycle block (by index): vertices whose two block edges have equal walk parity."""
    bd = _walk_blocks(g, w)
    parity = {}
    for k, e in enumerate(w.edges):
        parity.setdefault(e, k % 2)
    out = {}
    for idx, blk in enumerate(bd.blocks):
        if len(blk) < 3:
            continue
        at: dict[int, list[int]] = {}
        for e in blk:
            for v in g.edge(e):
                at.setdefault(v, []).append(parity[e])
        out[idx] = sorted(v for v, ps in at.items() if len(ps) == 2 and ps[0] == ps[1])
    return out


def is_strongly_primitive(g: Graph, w: Walk) -> bool:
    """Primitive with no two sinks joined by an edge of a common cycle block."""
    return _adjacent_sinks(g, w) is None


def _adjacent_sinks(g: Graph, w: Walk):
    bd = _walk_blocks(g, w)
    for idx, vs in sinks(g, w).items():
        blk = bd.blocks[idx]
        for u, v in combinations(vs, 2):
            if any(set(g.edge(e)) == {u, v} for e in blk):
                return (u, v)
    return None


@dataclass(frozen=True)
class WalkClassification:
    primitive: bool
    strongly_primitive: bool
    minimal: bool
    indispensable: bool
    chords: dict[int, ChordClass] = field(default_factory=dict)
    f4_pairs: tuple[tuple[int, int], ...] = ()
    effective_pairs: tuple[tuple[int, int], ...] = ()
    witness: str = ""

    def to_json(self, g: Graph) -> dict:
        return {
            "primitive": self.primitive,
            "strongly_primitive": self.strongly_primitive,
            "minimal": self.minimal,
            "indispensable": self.indispensable,
            "chords": {g.label(e): c.kind for e, c in sorted(self.chords.items())},
            "f4": [[g.label(a), g.label(b)] for a, b in self.f4_pairs],
            "effective": [[g.label(a), g.label(b)] for a, b in self.effective_pairs],
            "witness": self.witness,
        }


def _crosses_f4(g: Graph, w: Walk, h: int, f: int, f2: int) -> bool:
    """An odd chord ``h`` outside the F4 crosses one of its chords effectively."""
    return h not in (f, f2) and (_effective(g, w, h, f) or _effective(g, w, h, f2))


def classify_walk(g: Graph, w: Walk) -> WalkClassification:
    """Decide primitive / strongly primitive / minimal / indispensable."""
    for e in w.edges:
        if not g.has_edge(e):
            raise WalkError("walk uses an edge outside the graph")
    try:
        bn = w.binomial()
    except ValueError:
        return WalkClassification(False, False, False, False, witness="binomial is zero")
    if not is_primitive(g, bn):
        return WalkClassification(False, False, False, False, witness="binomial is not primitive")
    chord_map = {f: classify_chord(g, w, f) for f in chords(g, w)}
    adj = _adjacent_sinks(g, w)
    strong = adj is None
    odd = [f for f, c in chord_map.items() if c.is_odd]
    f4s, eff = [], []
    for f, f2 in combinations(odd, 2):
        if _effective(g, w, f, f2):
            (f4s if _is_f4(g, w, f, f2) else eff).append((f, f2))
    bad = [f for f, c in chord_map.items() if c.kind != "odd"]

    witness = ""
    if not strong:
        witness = f"adjacent sinks {adj[0] + 1} and {adj[1] + 1}"
    elif bad:
        witness = f"{chord_map[bad[0]].kind} chord {g.label(bad[0])}"
    all_odd = strong and not bad
    crossing_f4 = None
    for f, f2 in f4s:
        for h in odd:
            if _crosses_f4(g, w, h, f, f2):
                crossing_f4 = (h, f, f2)
                break
        if crossing_f4:
            break
    minimal = all_odd and not eff and crossing_f4 is None
    indispensable = all_odd and not eff and not f4s
    if all_odd and not witness:
        if eff:
            witness = f"chords {g.label(eff[0][0])} and {g.label(eff[0][1])} cross strongly effectively"
        elif crossing_f4:
            h, f, f2 = crossing_f4
            witness = f"odd chord {g.label(h)} crosses the F4 {{{g.label(f)}, {g.label(f2)}}}"
        elif f4s:
            witness = f"chords {g.label(f4s[0][0])} and {g.label(f4s[0][1])} form an F4"
    return WalkClassification(True, strong, minimal, indispensable, chord_map,
                              tuple(f4s), tuple(eff), witness)


def minimal_walks(g: Graph) -> list[Walk]:
    return [w for w in enumerate_primitive_walks(g) if classify_walk(g, w).minimal]


def indispensable_walks(g: Graph) -> list[Walk]:
    return [w for w in enumerate_primitive_walks(g) if classify_walk(g, w).indispensable]
