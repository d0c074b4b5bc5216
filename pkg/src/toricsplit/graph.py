"""Simple graphs with stable edge indices, subgraph surgery and named families.

Vertices are ``0..n-1`` internally and printed 1-based. Every graph carries the
full edge table of its ancestor; deleted edges become ``None`` so a subgraph
keeps the parent's edge indices and all ideals live in one polynomial ring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import networkx as nx

from .errors import GraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    slots: tuple[Edge | None, ...]
    labels: tuple[str, ...]
    vertex_set: frozenset[int] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        if self.vertex_set is None:
            object.__setattr__(self, "vertex_set", frozenset(range(self.n)))
        if len(self.labels) != len(self.slots):
            raise GraphError("one label per edge slot required")
        seen = set()
        for slot in self.slots:
            if slot is None:
                continue
            u, v = slot
            if u == v:
                raise GraphError(f"loop at vertex {u + 1}")
            if u not in self.vertex_set or v not in self.vertex_set:
                raise GraphError(f"edge {{{u + 1},{v + 1}}} leaves the vertex set")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"multi-edge {{{u + 1},{v + 1}}}")
            seen.add(key)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "Graph":
        """Build from 0-based vertex pairs; labels default to ``e1, e2, ...``."""
        edges = [tuple(sorted((int(u), int(v)))) for u, v in edges]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex out of range in edge {{{u + 1},{v + 1}}}")
        if labels is None:
            labels = [f"e{i + 1}" for i in range(len(edges))]
        return cls(n, tuple(edges), tuple(str(s) for s in labels))

    @classmethod
    def parse(cls, text: str) -> "Graph":
        """Parse the text format: ``n m`` then m lines ``u v [label]`` (1-based)."""
        lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise GraphError("empty graph description")
        try:
            n, m = (int(t) for t in lines[0].split())
        except ValueError as exc:
            raise GraphError(f"bad header line: {lines[0]!r}") from exc
        if len(lines) - 1 != m:
            raise GraphError(f"header announces {m} edges, found {len(lines) - 1}")
        edges, labels = [], []
        for i, ln in enumerate(lines[1:]):
            parts = ln.split()
            if len(parts) < 2:
                raise GraphError(f"bad edge line: {ln!r}")
            try:
                u, v = int(parts[0]) - 1, int(parts[1]) - 1
            except ValueError as exc:
                raise GraphError(f"bad edge line: {ln!r}") from exc
            edges.append((u, v))
            labels.append(parts[2] if len(parts) > 2 else f"e{i + 1}")
        return cls.from_edges(n, edges, labels)

    @classmethod
    def from_json(cls, data) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = int(data["vertices"])
            edges = [(int(u) - 1, int(v) - 1) for u, v in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError("JSON graph needs 'vertices' and 'edges'") from exc
        return cls.from_edges(n, edges, data.get("labels"))

    def to_text(self) -> str:
        out = [f"{self.n} {self.num_edges}"]
        for i in self.edge_ids:
            u, v = self.slots[i]
            out.append(f"{u + 1} {v + 1} {self.labels[i]}")
        return "\n".join(out) + "\n"

    def to_json(self) -> dict:
        return {
            "vertices": self.n,
            "edges": [[u + 1, v + 1] for u, v in (self.slots[i] for i in self.edge_ids)],
            "labels": [self.labels[i] for i in self.edge_ids],
        }

    # -- queries --------------------------------------------------------------

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.slots) if s is not None)

    @property
    def num_edges(self) -> int:
        return sum(1 for s in self.slots if s is not None)

    @property
    def vertices(self) -> list[int]:
        return sorted(self.vertex_set)

    def edge(self, i: int) -> Edge:
        if not (0 <= i < len(self.slots)) or self.slots[i] is None:
            raise GraphError(f"unknown edge index {i}")
        return self.slots[i]

    def has_edge(self, i: int) -> bool:
        return 0 <= i < len(self.slots) and self.slots[i] is not None

    def edge_index(self, u: int, v: int) -> int | None:
        key = (min(u, v), max(u, v))
        for i, s in enumerate(self.slots):
            if s == key:
                return i
        return None

    def label(self, i: int) -> str:
        return self.labels[i]

    def find_label(self, name: str) -> int:
        for i in self.edge_ids:
            if self.labels[i] == name:
                return i
        raise GraphError(f"no edge labelled {name!r}")

    def incidence(self) -> dict[int, list[tuple[int, int]]]:
        """vertex -> sorted list of (edge index, other endpoint)."""
        inc: dict[int, list[tuple[int, int]]] = {v: [] for v in self.vertex_set}
        for i in self.edge_ids:
            u, v = self.slots[i]
            inc[u].append((i, v))
            inc[v].append((i, u))
        return inc

    def degree(self, v: int) -> int:
        return sum(1 for i in self.edge_ids if v in self.slots[i])

    def is_subgraph_of(self, other: "Graph") -> bool:
        if len(self.slots) != len(other.slots) or self.n != other.n:
            return False
        return all(other.slots[i] == self.slots[i] for i in self.edge_ids) and \
            self.vertex_set <= other.vertex_set

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        for i in self.edge_ids:
            u, v = self.slots[i]
            G.add_edge(u, v, index=i)
        return G

    def restrict(self, keep) -> "Graph":
        """Subgraph on the same vertex set keeping only edge indices in ``keep``."""
        keep = set(keep)
        slots = tuple(s if i in keep else None for i, s in enumerate(self.slots))
        return Graph(self.n, slots, self.labels, self.vertex_set)

    def __repr__(self) -> str:
        edges = ", ".join(self.labels[i] for i in self.edge_ids)
        return f"Graph(n={len(self.vertex_set)}, edges=[{edges}])"


# -- surgery ------------------------------------------------------------------


def delete_edges(g: Graph, f) -> Graph:
    f = set(f)
    for i in f:
        g.edge(i)
    return g.restrict(set(g.edge_ids) - f)


def delete_vertex(g: Graph, v: int) -> Graph:
    if v not in g.vertex_set:
        raise GraphError(f"unknown vertex {v + 1}")
    slots = tuple(None if (s is not None and v in s) else s for s in g.slots)
    return Graph(g.n, slots, g.labels, g.vertex_set - {v})


def edge_subgraph(g: Graph, keep) -> Graph:
    """Subgraph with the given edges and the parent's full vertex set."""
    keep = set(keep)
    for i in keep:
        g.edge(i)
    return g.restrict(keep)


# -- blocks -------------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def blocks(g: Graph) -> BlockDecomposition:
    G = g.to_networkx()
    found = []
    for comp in nx.biconnected_component_edges(G):
        found.append(frozenset(G.edges[u, v]["index"] for u, v in comp))
    found.sort(key=min)
    return BlockDecomposition(tuple(found), frozenset(nx.articulation_points(G)))


# -- families -----------------------------------------------------------------


def _eps(i: int, j: int, n: int) -> str:
    return f"ε{i}{j}" if n < 10 else f"ε{i},{j}"


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, pairs, [_eps(i + 1, j + 1, n) for i, j in pairs])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("complete bipartite graph needs m, n >= 1")
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    big = m >= 10 or n >= 10
    labels = [f"b{i + 1},{j + 1}" if big else f"b{i + 1}{j + 1}" for i in range(m) for j in range(n)]
    return Graph.from_edges(m + n, edges, labels)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(rim: int) -> Graph:
    """Wheel on ``rim + 1`` vertices: rim edges first, then spokes to the hub."""
    if rim < 3:
        raise GraphError("wheel rim length must be >= 3")
    n = rim + 1
    rim_edges = [(i, i + 1) for i in range(rim - 1)] + [(0, rim - 1)]
    spokes = [(i, rim) for i in range(rim)]
    edges = rim_edges + spokes
    labels = [_eps(u + 1, v + 1, n) for u, v in edges]
    return Graph.from_edges(n, edges, labels)


def roundabout(n: int) -> Graph:
    """Bipartite graph with 3n+2 vertices and 5n+1 edges.

    Vertex order: v_1..v_n, m_1..m_n, m'_1..m'_n, o, o'. Edge order: e, then
    the blocks e_i, R_i, R'_i, r_i, l_i, each for i = 1..n.
    """
    if n < 3:
        raise GraphError("roundabout needs n >= 3")
    v = lambda i: i  # noqa: E731
    m = lambda i: n + i  # noqa: E731
    mp = lambda i: 2 * n + i  # noqa: E731
    o, op = 3 * n, 3 * n + 1
    edges, labels = [(o, op)], ["e"]
    groups = [
        ("e", lambda i: (m(i), mp(i))),
        ("R", lambda i: (o, m(i))),
        ("R'", lambda i: (op, mp(i))),
        ("r", lambda i: (v(i), m(i))),
        ("l", lambda i: (v(i), m((i - 1) % n))),
    ]
    for name, make in groups:
        for i in range(n):
            edges.append(make(i))
            labels.append(f"{name}{i + 1}")
    return Graph.from_edges(3 * n + 2, edges, labels)


def cycle_row(k: int) -> Graph:
    """``k`` four-cycles in a row (a 2 x (k+1) ladder).

    Top vertices t_0..t_k are 0..k, bottom b_0..b_k are k+1..2k+1. Edges: rungs
    s0..sk, then top edges t1..tk, then bottom edges b1..bk.
    """
    if k < 1:
        raise GraphError("cycle_row needs k >= 1")
    top = lambda i: i  # noqa: E731
    bot = lambda i: k + 1 + i  # noqa: E731
    edges = [(top(i), bot(i)) for i in range(k + 1)]
    labels = [f"s{i}" for i in range(k + 1)]
    edges += [(top(i - 1), top(i)) for i in range(1, k + 1)]
    labels += [f"t{i}" for i in range(1, k + 1)]
    edges += [(bot(i - 1), bot(i)) for i in range(1, k + 1)]
    labels += [f"b{i}" for i in range(1, k + 1)]
    return Graph.from_edges(2 * (k + 1), edges, labels)


def grid(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise GraphError("grid needs at least two vertices")
    at = lambda r, c: r * cols + c  # noqa: E731
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((at(r, c), at(r, c + 1)))
            if r + 1 < rows:
                edges.append((at(r, c), at(r + 1, c)))
    return Graph.from_edges(rows * cols, edges)


_FAMILIES = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "wheel": (wheel, 1),
    "roundabout": (roundabout, 1),
    "cycle_row": (cycle_row, 1),
    "grid": (grid, 2),
}

FAMILY_NAMES = tuple(_FAMILIES)


def family(name: str, params) -> Graph:
    try:
        make, arity = _FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}") from None
    params = [int(p) for p in params]
    if len(params) != arity:
        raise GraphError(f"family {name} takes {arity} parameter(s), got {len(params)}")
    return make(*params)


def expected_edge_count(name: str, params) -> int:
    """Closed-form edge counts, used as a sanity check on the generators."""
    p = list(params)
    return {
        "complete": lambda: comb(p[0], 2),
        "complete_bipartite": lambda: p[0] * p[1],
        "cycle": lambda: p[0],
        "wheel": lambda: 2 * p[0],
        "roundabout": lambda: 5 * p[0] + 1,
        "cycle_row": lambda: 3 * p[0] + 1,
        "grid": lambda: p[0] * (p[1] - 1) + p[1] * (p[0] - 1),
    }[name]()
