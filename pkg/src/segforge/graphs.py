"""Simple undirected graphs, connectivity classes, and st-numberings.

Graphs are immutable: vertex ids are 0..n-1, edges a frozenset of sorted
pairs, adjacency lists sorted for deterministic iteration.  Connectivity is
reported capped at 3 (only the classes 1/2/3 matter downstream).
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .errors import (GraphFormatError, InvalidOrdering, NotAnEdge,
                     NotBiconnected, NotCubic)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError("negative vertex count")
        seen = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range 0..{n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"parallel edge ({u},{v})")
            seen.add(key)
        self.n = n
        self.edges = frozenset(seen)
        adj = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self):
        return tuple(len(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self):
        return sorted(self.edges)

    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(a) == 3 for a in self.adj)

    def odd_degree_count(self) -> int:
        return sum(1 for a in self.adj if len(a) % 2 == 1)

    def to_networkx(self) -> "nx.Graph":
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# =============================================================================
# Text format: `n m` header then one `u v` line per edge, # comments allowed
# =============================================================================

def parse_graph(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise GraphFormatError("expected header `n m`", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError("header fields must be integers", lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError("expected edge `u v`", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError("loops are not allowed", lineno)
        if (min(u, v), max(u, v)) in set(map(tuple, map(sorted, edges))):
            raise GraphFormatError(f"duplicate edge ({u},{v})", lineno)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("empty graph file", 1)
    if len(edges) != m:
        raise GraphFormatError(f"header announced {m} edges, found {len(edges)}", 1)
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# =============================================================================
# Connectivity
# =============================================================================

def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        for w in g.adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def is_biconnected(g: Graph) -> bool:
    return g.n >= 3 and nx.is_biconnected(g.to_networkx())


def connectivity(g: Graph) -> int:
    """min(3, vertex connectivity); 0 for disconnected or trivial graphs."""
    if g.n <= 1 or not is_connected(g):
        return 0
    if not is_biconnected(g):
        return 1
    return min(3, nx.node_connectivity(g.to_networkx()))


# =============================================================================
# st-numbering
# =============================================================================

@dataclass(frozen=True)
class STNumbering:
    """Vertex order <v_1..v_n> plus per-vertex predecessor counts."""

    order: tuple
    pclass: tuple  # pclass[v] = number of neighbors of v placed earlier

    @property
    def s(self):
        return self.order[0]

    @property
    def t(self):
        return self.order[-1]

    def position(self):
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


def _pclass_of(g: Graph, order) -> tuple:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return tuple(sum(1 for w in g.adj[v] if pos[w] < pos[v]) for v in range(g.n))


def check_st_property(g: Graph, order) -> bool:
    """Brute validator: every interior vertex has an earlier and a later neighbor."""
    if sorted(order) != list(range(g.n)):
        return False
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for i, v in enumerate(order):
        if 0 < i < g.n - 1:
            if not any(pos[w] < i for w in g.adj[v]):
                return False
            if not any(pos[w] > i for w in g.adj[v]):
                return False
    return g.has_edge(order[0], order[-1])


def st_numbering(g: Graph, s: int | None = None, t: int | None = None) -> STNumbering:
    """Compute an st-numbering of a biconnected graph with first vertex s, last t.

    Defaults: (s, t) is the lexicographically smallest edge.  Uses the
    DFS/lowpoint list-insertion scheme; the result is verified against the
    predecessor/successor property before returning.
    """
    if g.n < 3 or not is_biconnected(g):
        raise NotBiconnected(f"graph with n={g.n} is not biconnected")
    if s is None or t is None:
        s, t = min(g.sorted_edges())
    if not g.has_edge(s, t):
        raise NotAnEdge(f"({s},{t}) is not an edge")

    # Iterative DFS from s whose first tree edge is s->t.
    pre = {s: 0}
    parent = {s: None}
    low = {s: s}  # lowest-preorder vertex reachable via tree path + one back edge
    preorder = [s]
    counter = 1

    def neighbors_first_t(v):
        if v == s:
            return [t] + [w for w in g.adj[s] if w != t]
        return list(g.adj[v])

    stack = [(s, iter(neighbors_first_t(s)))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if w not in pre:
                pre[w] = counter
                counter += 1
                parent[w] = v
                low[w] = w
                preorder.append(w)
                stack.append((w, iter(neighbors_first_t(w))))
                advanced = True
                break
            elif w != parent[v] and pre[w] < pre[low[v]]:
                low[v] = w
        if not advanced:
            stack.pop()
            if stack:
                u = stack[-1][0]
                if pre[low[v]] < pre[low[u]]:
                    low[u] = low[v]

    # Sign-based list insertion: process vertices in preorder, skipping s, t.
    order = [s, t]
    signs = {s: -1}
    for v in preorder:
        if v in (s, t):
            continue
        p = parent[v]
        at = order.index(p)
        if signs.get(low[v], 1) == -1:
            order.insert(at, v)
            signs[p] = 1
        else:
            order.insert(at + 1, v)
            signs[p] = -1

    order = tuple(order)
    if not check_st_property(g, order):
        raise InvalidOrdering("internal: computed order fails the st property")
    return STNumbering(order, _pclass_of(g, order))


def classify_st(g: Graph, numbering: STNumbering) -> tuple:
    """Histogram (c0, c1, c2, c3) of predecessor counts for a cubic biconnected graph."""
    if not g.is_cubic():
        raise NotCubic("classification is defined for cubic graphs")
    if len(numbering.order) != g.n or not check_st_property(g, numbering.order):
        raise InvalidOrdering("not a valid st-numbering of this graph")
    pclass = _pclass_of(g, numbering.order)
    hist = [0, 0, 0, 0]
    for c in pclass:
        hist[c] += 1
    return tuple(hist)
