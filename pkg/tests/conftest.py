import itertools

import pytest


def brute_force_maximal_independent(g):
    """Oracle: maximal independent sets by scanning all vertex subsets."""
    assert g.n <= 20, "oracle is exponential"
    out = []
    for mask in range(1 << g.n):
        verts = [v for v in range(g.n) if mask >> v & 1]
        if any(g.adj[v] & mask for v in verts):
            continue
        if any(not (mask >> v & 1) and not (g.adj[v] & mask) for v in range(g.n)):
            continue
        out.append(tuple(verts))
    return sorted(out)


def brute_force_alpha(g):
    return max(len(s) for s in brute_force_maximal_independent(g)) if g.n else 0


def leibniz_det(rows, base):
    """Oracle determinant: signed sum over permutations."""
    n = len(rows)
    acc = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = base.one
        for i in range(n):
            term = base.mul(term, rows[i][perm[i]])
        acc = base.add(acc, base.neg(term) if inv % 2 else term)
    return acc


@pytest.fixture(scope="session")
def oracles():
    return {
        "maximal_independent": brute_force_maximal_independent,
        "alpha": brute_force_alpha,
        "det": leibniz_det,
    }
