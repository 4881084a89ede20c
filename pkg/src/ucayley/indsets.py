"""Independent-set machinery on unitary Cayley graphs.

Maximal independent sets are enumerated as maximal cliques of the
complement graph (Bron-Kerbosch with pivoting); all orders are
deterministic so streams can be golden-tested.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field


class BudgetExceededError(Exception):
    """Raised when an enumeration budget (nodes or wall clock) trips."""


class Budget:
    """Node-count / wall-clock budget shared by a search."""

    def __init__(self, max_nodes=None, max_seconds=None):
        if max_nodes is not None and max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if max_seconds is not None and max_seconds <= 0:
            raise ValueError("max_seconds must be positive")
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds
        self.nodes = 0
        self.t0 = time.monotonic()

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceededError("node budget %d exhausted" % self.max_nodes)
        if self.max_seconds is not None and self.nodes % 256 == 0:
            if time.monotonic() - self.t0 > self.max_seconds:
                raise BudgetExceededError("time budget %.3fs exhausted" % self.max_seconds)


def _bits(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _nonadjacency(g):
    full = (1 << g.n) - 1
    return [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]


def enumerate_maximal_independent(g, budget=None):
    """Yield every maximal independent set of g exactly once, as sorted tuples.

    Pivot rule: the candidate (from P u X) with the most non-neighbors in P,
    ties broken by lowest index.
    """
    if budget is None:
        budget = Budget()
    non = _nonadjacency(g)
    chosen = []

    def bk(P, X):
        budget.tick()
        if P == 0 and X == 0:
            yield tuple(sorted(chosen))
            return
        pivot, best = -1, -1
        for u in _bits(P | X):
            c = (P & non[u]).bit_count()
            if c > best:
                pivot, best = u, c
        for v in _bits(P & ~non[pivot]):
            chosen.append(v)
            yield from bk(P & non[v], X & non[v])
            chosen.pop()
            P &= ~(1 << v)
            X |= 1 << v

    if g.n == 0:
        return
    yield from bk((1 << g.n) - 1, 0)


def independence_number(g, budget=None):
    """alpha(g) by branch and bound on the complement (bitset bound)."""
    if budget is None:
        budget = Budget()
    non = _nonadjacency(g)
    best = 0

    def expand(size, P):
        nonlocal best
        budget.tick()
        if size > best:
            best = size
        while P:
            if size + P.bit_count() <= best:
                return
            b = P & -P
            v = b.bit_length() - 1
            expand(size + 1, P & non[v])
            P ^= b

    if g.n:
        expand(0, (1 << g.n) - 1)
    return best


@dataclass
class WellCoveredReport:
    answer: str  # "yes" | "no" | "inconclusive"
    alpha: int
    witness_small: tuple | None = None
    counts: dict = field(default_factory=dict)
    complete: bool = False

    def to_json(self):
        out = {
            "answer": self.answer,
            "alpha": self.alpha,
            "complete": self.complete,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
        }
        if self.witness_small is not None:
            out["witness_small"] = list(self.witness_small)
        return out


def is_well_covered(g, budget=None):
    """Decide whether all maximal independent sets of g share one size.

    Full-enumeration verdict when the budget allows; a "no" is returned as
    soon as two maximal sets of different sizes are seen (with the smaller
    one as witness); a tripped budget without a witness is "inconclusive".
    """
    if budget is None:
        budget = Budget()
    counts = {}
    smallest = largest = None
    exhausted = False
    try:
        for s in enumerate_maximal_independent(g, budget):
            counts[len(s)] = counts.get(len(s), 0) + 1
            if smallest is None or len(s) < len(smallest):
                smallest = s
            if largest is None or len(s) > len(largest):
                largest = s
            if len(smallest) < len(largest):
                break
    except BudgetExceededError:
        exhausted = True
    if smallest is not None and largest is not None and len(smallest) < len(largest):
        alpha = independence_number(g, Budget(budget.max_nodes, budget.max_seconds))
        return WellCoveredReport("no", alpha, witness_small=smallest,
                                 counts=counts, complete=False)
    if exhausted:
        return WellCoveredReport("inconclusive", max(counts) if counts else 0,
                                 counts=counts, complete=False)
    return WellCoveredReport("yes", max(counts) if counts else 0,
                             counts=counts, complete=True)


def greedy_extend(g, seed):
    """Deterministically extend an independent seed to a maximal set.

    Eligible vertices are added in increasing index order.
    """
    mask = 0
    for v in seed:
        if not 0 <= v < g.n:
            raise ValueError("seed vertex %d out of range" % v)
        mask |= 1 << v
    for v in seed:
        if g.adj[v] & mask:
            raise ValueError("seed is not an independent set")
    for v in range(g.n):
        if mask >> v & 1:
            continue
        if not g.adj[v] & mask:
            mask |= 1 << v
    return tuple(_bits(mask))


def radical_saturate(ring, radical, elems):
    """A + J(R) = {a + j : a in A, j in J} as a sorted tuple of indices."""
    out = set()
    for a in elems:
        for j in radical:
            out.add(ring.add(a, j))
    return tuple(sorted(out))
