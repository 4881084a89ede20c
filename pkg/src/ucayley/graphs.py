"""Unitary Cayley graphs, conjunction products, DOT/JSON export.

Adjacency is stored as one Python int bitset per vertex; the downstream
enumeration kernels live on word-parallel set intersections.
"""
from __future__ import annotations

from .rings import CapExceededError

DEFAULT_GRAPH_CAP = 2 ** 14


class UGraph:
    """Undirected simple graph on vertices 0..n-1 with bitset adjacency."""

    def __init__(self, n, labels=None):
        self.n = n
        self.adj = [0] * n
        self.labels = labels

    def add_edge(self, u, v):
        if u == v:
            raise ValueError("no loops in a simple graph")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def degree(self, v):
        return self.adj[v].bit_count()

    def edges(self):
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                out.append((u, b.bit_length() - 1))
                m ^= b
        return out

    def edge_count(self):
        return sum(self.degree(v) for v in range(self.n)) // 2

    def __eq__(self, other):
        return isinstance(other, UGraph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))


def build_graph(ring, cap=DEFAULT_GRAPH_CAP):
    """The unitary Cayley graph of a ring: x ~ y iff x - y is a unit."""
    if ring.order > cap:
        raise CapExceededError("|R| = %d exceeds the graph cap %d" % (ring.order, cap))
    g = UGraph(ring.order, labels=[ring.element_repr(x) for x in range(ring.order)])
    units = ring.units()
    for x in range(ring.order):
        row = 0
        for u in units:
            y = ring.add(x, u)
            if y != x:  # zero ring: 0 is a unit but loops are dropped
                row |= 1 << y
        g.adj[x] = row
    return g


def conjunction_product(g1, g2):
    """Pairs (v1, v2) adjacent iff both coordinates are adjacent.

    Vertex (v1, v2) gets index v1 * g2.n + v2 (row-major).
    """
    n1, n2 = g1.n, g2.n
    out = UGraph(n1 * n2)
    if g1.labels is not None and g2.labels is not None:
        out.labels = ["(%s|%s)" % (a, b) for a in g1.labels for b in g2.labels]
    for v1 in range(n1):
        m1 = g1.adj[v1]
        for v2 in range(n2):
            row = 0
            block = g2.adj[v2]
            m = m1
            while m:
                b = m & -m
                row |= block << ((b.bit_length() - 1) * n2)
                m ^= b
            out.adj[v1 * n2 + v2] = row
    return out


def export_dot(g):
    """Deterministic DOT text: vertices in index order, edges low-high."""
    lines = ["graph G {"]
    for v in range(g.n):
        if g.labels is not None:
            lines.append('  %d [label="%s"];' % (v, g.labels[v]))
        else:
            lines.append("  %d;" % v)
    for u, v in g.edges():
        lines.append("  %d -- %d;" % (u, v))
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json(g):
    """JSON-ready dict {N, edges} with the sorted edge list."""
    return {"N": g.n, "edges": [list(e) for e in g.edges()]}
