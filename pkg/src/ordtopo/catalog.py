"""Named finite posets, exhaustive enumeration up to isomorphism, random instances."""

from itertools import permutations

import numpy as np

from .poset import FinPoset


def chain(n):
    """Total order 0 < 1 < ... < n-1."""
    leq = np.triu(np.ones((n, n), dtype=bool))
    return FinPoset(leq)


def antichain(n):
    """n pairwise incomparable points."""
    return FinPoset(np.eye(n, dtype=bool))


def lambda_poset():
    """One bottom below two incomparable points: 0 < 1, 0 < 2."""
    return FinPoset.from_cover_pairs(3, [(0, 1), (0, 2)])


def vee_poset():
    """Two incomparable points below one top: 0 < 2, 1 < 2."""
    return FinPoset.from_cover_pairs(3, [(0, 2), (1, 2)])


def diamond_poset():
    """Bottom, two middle points, top: 0 < {1,2} < 3."""
    return FinPoset.from_cover_pairs(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


NAMED = {
    "chain2": lambda: chain(2),
    "chain3": lambda: chain(3),
    "antichain2": lambda: antichain(2),
    "antichain3": lambda: antichain(3),
    "lambda": lambda_poset,
    "vee": vee_poset,
    "diamond": diamond_poset,
}


def named(name):
    if name not in NAMED:
        raise KeyError(f"unknown poset name {name!r}; known: {sorted(NAMED)}")
    return NAMED[name]()


def canonical_key(poset):
    """Bytes invariant under relabeling: minimum of the relation matrix over all
    permutations of the carrier.  Quadratic in n! so only sensible for small n."""
    n = poset.n
    if n <= 1:
        return poset.leq.tobytes()
    best = None
    for perm in permutations(range(n)):
        idx = np.array(perm)
        cand = poset.leq[np.ix_(idx, idx)].tobytes()
        if best is None or cand < best:
            best = cand
    return best


def all_posets(n):
    """Every poset on n elements, one representative per isomorphism class.

    Generates reflexive-transitive closures of all edge sets on pairs (i, j)
    with i < j; every finite poset admits a linear extension, so each class is
    hit at least once.  Deduplicates by canonical_key.  Feasible for n <= 5
    (class counts 1, 1, 2, 5, 16, 63).
    """
    if n == 0:
        return [FinPoset(np.zeros((0, 0), dtype=bool))]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = {}
    for bits in range(1 << len(pairs)):
        leq = np.eye(n, dtype=bool)
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                leq[i, j] = True
        # closure: edges only point up in index order, one sweep from the top suffices
        for j in range(n - 1, -1, -1):
            for i in range(j):
                if leq[i, j]:
                    leq[i] |= leq[j]
        p = FinPoset(leq)
        key = canonical_key(p)
        if key not in seen:
            seen[key] = p
    return [seen[k] for k in sorted(seen)]


def random_poset(rng, max_n):
    """Random poset with 1..max_n elements from a numpy Generator.

    Draws an edge probability, fills the strict upper triangle, then closes
    transitively.  Deterministic for a fixed generator state.
    """
    n = int(rng.integers(1, max_n + 1))
    p = float(rng.uniform(0.1, 0.6))
    leq = np.eye(n, dtype=bool)
    edges = rng.random((n, n)) < p
    for i in range(n):
        for j in range(i + 1, n):
            if edges[i, j]:
                leq[i, j] = True
    for j in range(n - 1, -1, -1):
        for i in range(j):
            if leq[i, j]:
                leq[i] |= leq[j]
    return FinPoset(leq)
