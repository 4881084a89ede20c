"""Independence complexes and the combinatorial Cohen-Macaulay obstructions.

Covers purity, pure skeletons, connectivity in codimension 1, a
backtracking shelling search, and edge-ideal / Stanley-Reisner export.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import UGraph
from .indsets import Budget, BudgetExceededError, enumerate_maximal_independent

SHELLING_FOUND = "shelling"
SHELLING_NONE = "no shelling exists"
SHELLING_UNKNOWN = "none found within budget"


class Complex:
    """Simplicial complex on vertices 0..n-1, given by its facet list.

    Facets are stored canonically: sorted tuples, ordered by size then
    lexicographically.  The facet list must be an antichain.
    """

    def __init__(self, n, facets):
        self.n = n
        canon = sorted({tuple(sorted(f)) for f in facets}, key=lambda f: (len(f), f))
        for f in canon:
            for v in f:
                if not 0 <= v < n:
                    raise ValueError("facet vertex %d out of range" % v)
        for a, b in itertools.combinations(canon, 2):
            if set(a) <= set(b) or set(b) <= set(a):
                raise ValueError("facet list is not an antichain: %r, %r" % (a, b))
        self.facets = tuple(canon)

    @property
    def dim(self):
        if not self.facets:
            return -2  # void complex
        return max(len(f) for f in self.facets) - 1

    def __eq__(self, other):
        return isinstance(other, Complex) and self.n == other.n and self.facets == other.facets

    def __repr__(self):
        return "Complex(n=%d, facets=%d, dim=%d)" % (self.n, len(self.facets), self.dim)


def from_face_list(n, faces):
    """Build a complex from an arbitrary face list, keeping the maximal ones."""
    faces = sorted({tuple(sorted(f)) for f in faces}, key=len, reverse=True)
    facets = []
    for f in faces:
        if not any(set(f) <= set(g) for g in facets):
            facets.append(f)
    return Complex(n, facets)


def independence_complex(g, budget=None):
    """ind(g): the complex whose facets are the maximal independent sets."""
    return Complex(g.n, list(enumerate_maximal_independent(g, budget)))


def is_pure(c):
    return len({len(f) for f in c.facets}) <= 1


def pure_skeleton(c, d):
    """The pure d-skeleton: facets are all d-dimensional faces of c."""
    if not -1 <= d <= c.dim:
        raise ValueError("skeleton dimension %d out of range for %r" % (d, c))
    faces = set()
    for f in c.facets:
        faces.update(itertools.combinations(f, d + 1))
    return Complex(c.n, sorted(faces))


def codim1_connected(c):
    """Connectivity of the facet graph linking facets meeting in codimension 1.

    Returns (connected, components) where components partition the facet
    list (by facet index into c.facets).  Input must be pure.
    """
    if not is_pure(c):
        raise ValueError("codimension-1 connectivity requires a pure complex")
    t = len(c.facets)
    if t == 0:
        return True, []
    sets = [set(f) for f in c.facets]
    size = len(c.facets[0])
    parent = list(range(t))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(t), 2):
        if len(sets[i] & sets[j]) == size - 1:
            parent[find(i)] = find(j)
    comps = {}
    for i in range(t):
        comps.setdefault(find(i), []).append(i)
    components = sorted(comps.values())
    return len(components) == 1, components


def _attaches(facet, prior_facets):
    """Shelling step: <prior> n <facet> must be pure of dim |facet| - 2.

    Equivalently every intersection with a prior facet sits inside one of
    size |facet| - 1.
    """
    fs = set(facet)
    inters = {tuple(sorted(fs & set(p))) for p in prior_facets}
    want = len(facet) - 1
    bigs = [set(i) for i in inters if len(i) == want]
    return all(any(set(i) <= b for b in bigs) or len(i) == want for i in inters)


def is_shelling_order(c, order):
    """Replay an order of facet indices and check the shelling condition."""
    if sorted(order) != list(range(len(c.facets))):
        return False
    for i in range(1, len(order)):
        if not _attaches(c.facets[order[i]], [c.facets[j] for j in order[:i]]):
            return False
    return True


@dataclass
class ShellingResult:
    status: str  # SHELLING_FOUND | SHELLING_NONE | SHELLING_UNKNOWN
    order: tuple | None = None
    detail: str = ""

    def to_json(self):
        out = {"status": self.status, "detail": self.detail}
        if self.order is not None:
            out["order"] = list(self.order)
        return out


def find_shelling(c, budget=None):
    """Search for a shelling order of a pure complex.

    Fast negative: a pure complex that is disconnected in codimension 1
    admits no shelling.  Otherwise backtracking over facet orders (the
    shelling condition only depends on the *set* of prior facets, so dead
    prefixes are memoized by that set).
    """
    if not is_pure(c):
        raise ValueError("shellability is defined here for pure complexes only")
    if budget is None:
        budget = Budget()
    t = len(c.facets)
    if t <= 1:
        return ShellingResult(SHELLING_FOUND, tuple(range(t)), "at most one facet")
    if c.dim == 0:
        return ShellingResult(SHELLING_FOUND, tuple(range(t)),
                              "dimension 0: any order shells")
    connected, comps = codim1_connected(c)
    if not connected:
        return ShellingResult(SHELLING_NONE,
                              detail="disconnected in codimension 1 "
                                     "(%d components)" % len(comps))
    facets = c.facets
    dead = set()

    def extend(order, mask):
        budget.tick()
        if len(order) == t:
            return order
        if mask in dead:
            return None
        prior = [facets[j] for j in order]
        for i in range(t):
            if mask >> i & 1:
                continue
            if order and not _attaches(facets[i], prior):
                continue
            hit = extend(order + [i], mask | (1 << i))
            if hit is not None:
                return hit
        dead.add(mask)
        return None

    try:
        hit = extend([], 0)
    except BudgetExceededError:
        return ShellingResult(SHELLING_UNKNOWN, detail="budget exhausted")
    if hit is None:
        return ShellingResult(SHELLING_NONE, detail="backtracking exhausted all orders")
    order = tuple(hit)
    assert is_shelling_order(c, order)
    return ShellingResult(SHELLING_FOUND, order)


def minimal_nonfaces(c):
    """Minimal non-faces of a complex, sizes 1..dim+2, in canonical order."""
    faces_by_size = {0: {()}}
    for f in c.facets:
        for s in range(1, len(f) + 1):
            faces_by_size.setdefault(s, set()).update(itertools.combinations(f, s))
    out = []
    for s in range(1, c.dim + 3):
        smaller = faces_by_size.get(s - 1, set())
        here = faces_by_size.get(s, set())
        cands = set()
        for f in smaller:
            for v in range(c.n):
                if v not in f:
                    cands.add(tuple(sorted(f + (v,))))
        for cand in sorted(cands):
            if cand in here:
                continue
            subs = list(itertools.combinations(cand, s - 1))
            if all(sub in smaller for sub in subs):
                out.append(cand)
    return sorted(out, key=lambda f: (len(f), f))


def export_stanley_reisner(obj, cap=4096):
    """Squarefree monomial generators, one per line.

    For a graph: the edge ideal x_u*x_v per edge.  For a complex: the
    minimal non-faces.  A header names the variable count; an empty
    generator list is the zero ideal.
    """
    if isinstance(obj, UGraph):
        if obj.n > cap:
            raise ValueError("graph on %d vertices exceeds the export cap %d" % (obj.n, cap))
        gens = [(u, v) for u, v in obj.edges()]
        n = obj.n
    elif isinstance(obj, Complex):
        if obj.n > cap:
            raise ValueError("complex on %d vertices exceeds the export cap %d" % (obj.n, cap))
        gens = minimal_nonfaces(obj)
        n = obj.n
    else:
        raise TypeError("expected a UGraph or a Complex")
    lines = ["# squarefree monomial ideal in %d variables x_0 .. x_%d" % (n, n - 1)]
    for gen in gens:
        lines.append("*".join("x_%d" % v for v in gen))
    return "\n".join(lines) + "\n"
