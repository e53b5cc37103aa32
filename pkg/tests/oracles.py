"""Naive reference implementations used as test oracles.

Everything here works from raw data: a carrier size ``n`` and a relation
given as a set of ``(i, j)`` pairs meaning ``i <= j``.  Subsets are plain
frozensets.  Each function follows the quantifier shape of the defining
condition directly, with no reductions and no shared code with the library,
so that library results can be checked against an independent computation.
Deliberately slow; intended for small carriers only.
"""

from itertools import product


def reflexive_transitive_closure(n, pairs):
    rel = {(i, i) for i in range(n)} | set(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in product(list(rel), list(rel)):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return frozenset(rel)


def is_partial_order(n, rel):
    for i in range(n):
        if (i, i) not in rel:
            return False
    for i, j in rel:
        if (j, i) in rel and i != j:
            return False
        for k in range(n):
            if (j, k) in rel and (i, k) not in rel:
                return False
    return True


def all_subsets(n):
    out = []
    for bits in range(1 << n):
        out.append(frozenset(i for i in range(n) if bits >> i & 1))
    return out


def down_closure(n, rel, a):
    return frozenset(x for x in range(n) if any((x, y) in rel for y in a))


def up_closure(n, rel, a):
    return frozenset(x for x in range(n) if any((y, x) in rel for y in a))


def upper_bounds(n, rel, a):
    return frozenset(x for x in range(n) if all((y, x) in rel for y in a))


def lower_bounds(n, rel, a):
    return frozenset(x for x in range(n) if all((x, y) in rel for y in a))


def cut(n, rel, a):
    return lower_bounds(n, rel, upper_bounds(n, rel, a))


def maximal_elements(n, rel, a):
    return frozenset(x for x in a if not any((x, y) in rel and x != y for y in a))


def minimal_elements(n, rel, a):
    return frozenset(x for x in a if not any((y, x) in rel and x != y for y in a))


def is_lower_set(n, rel, a):
    return all(x in a for y in a for x in range(n) if (x, y) in rel)


def is_upper_set(n, rel, a):
    return all(x in a for y in a for x in range(n) if (y, x) in rel)


def is_directed(n, rel, a):
    if not a:
        return False
    return all(
        any((x, z) in rel and (y, z) in rel for z in a) for x in a for y in a
    )


def closed_sets(n, rel):
    """All closed sets of the up-set topology, i.e. all lower sets."""
    return [a for a in all_subsets(n) if is_lower_set(n, rel, a)]


def open_sets(n, rel):
    return [a for a in all_subsets(n) if is_upper_set(n, rel, a)]


def closure_of(n, rel, a):
    c = frozenset(range(n))
    for f in closed_sets(n, rel):
        if a <= f and f < c:
            c = f
    return c


def saturation_of(n, rel, a):
    s = frozenset(range(n))
    for u in open_sets(n, rel):
        if a <= u:
            s &= u
    return s


def is_irreducible(n, rel, a):
    """Quantifier definition over pairs of closed sets."""
    if not a:
        return False
    for f1 in closed_sets(n, rel):
        for f2 in closed_sets(n, rel):
            if a <= f1 | f2 and not (a <= f1) and not (a <= f2):
                return False
    return True


def irreducible_closed_sets(n, rel):
    return [a for a in closed_sets(n, rel) if is_irreducible(n, rel, a)]


def point_closures(n, rel):
    out = set()
    for x in range(n):
        out.add(closure_of(n, rel, frozenset([x])))
    return sorted(out, key=sorted)


def directed_closures(n, rel):
    out = set()
    for a in all_subsets(n):
        if is_directed(n, rel, a):
            out.add(closure_of(n, rel, a))
    return sorted(out, key=sorted)


def compact_saturated_sets(n, rel):
    """Nonempty saturated sets.

    On a finite carrier every subset is compact outright: an open cover is a
    family of opens, of which there are finitely many, so it is its own
    finite subcover.  Saturation is checked definitionally as a fixed point
    of the intersection-of-open-neighbourhoods operator.
    """
    return [
        a
        for a in all_subsets(n)
        if a and saturation_of(n, rel, a) == a
    ]


def monotone_maps(n_x, rel_x, n_y, rel_y):
    """All order-preserving maps, brute filter over every assignment."""
    maps = []
    for f in product(range(n_y), repeat=n_x):
        if all((f[i], f[j]) in rel_y for (i, j) in rel_x):
            maps.append(f)
    return maps


def is_continuous(n_x, rel_x, n_y, rel_y, f):
    for u in open_sets(n_y, rel_y):
        pre = frozenset(x for x in range(n_x) if f[x] in u)
        if not is_upper_set(n_x, rel_x, pre):
            return False
    return True


def has_unique_generic_point(n, rel, c):
    return sum(1 for x in range(n) if closure_of(n, rel, frozenset([x])) == c) == 1


def is_sober(n, rel):
    return all(
        has_unique_generic_point(n, rel, c) for c in irreducible_closed_sets(n, rel)
    )


def meets_all(a, family):
    return all(a & k for k in family)


def m_and_m(n, rel, family):
    """Closed sets meeting every member, and the inclusion-minimal ones."""
    big = [c for c in closed_sets(n, rel) if c and meets_all(c, family)]
    small = [c for c in big if not any(d < c for d in big)]
    return big, small


def is_filtered_family(family):
    fam = list(family)
    if not fam:
        return False
    return all(any(k3 <= k1 & k2 for k3 in fam) for k1 in fam for k2 in fam)


def filtered_subfamilies(n, rel):
    """Every filtered family of nonempty saturated sets.  Tiny n only."""
    ks = compact_saturated_sets(n, rel)
    out = []
    for bits in range(1, 1 << len(ks)):
        fam = [ks[i] for i in range(len(ks)) if bits >> i & 1]
        if is_filtered_family(fam):
            out.append(fam)
    return out


def rudin_sets_exhaustive(n, rel):
    """Closed sets that are minimal among those meeting some filtered family."""
    out = set()
    for fam in filtered_subfamilies(n, rel):
        _, small = m_and_m(n, rel, fam)
        out.update(small)
    return sorted(out, key=sorted)


def lattice_of_opens(n, rel):
    """The open-set lattice as (elements, leq-pairs) ordered by inclusion."""
    elems = sorted(open_sets(n, rel), key=sorted)
    leq = {
        (i, j)
        for i, e in enumerate(elems)
        for j, f in enumerate(elems)
        if e <= f
    }
    return elems, leq


def is_filter(m, leq, sub):
    """Nonempty upper subset of an m-element poset, down-directed."""
    if not sub:
        return False
    if not all(j in sub for i in sub for j in range(m) if (i, j) in leq):
        return False
    return all(
        any((k, i) in leq and (k, j) in leq for k in sub) for i in sub for j in sub
    )


def is_scott_open(m, leq, sub):
    if not all(j in sub for i in sub for j in range(m) if (i, j) in leq):
        return False
    for bits in range(1, 1 << m):
        d = frozenset(i for i in range(m) if bits >> i & 1)
        if not is_directed(m, leq, d):
            continue
        ub = upper_bounds(m, leq, d)
        sups = [u for u in ub if all((u, v) in leq for v in ub)]
        if sups and sups[0] in sub and not (d & sub):
            return False
    return True


def scott_open_filters_of_opens(n, rel):
    """Scott-open filters of the open-set lattice that avoid the empty open."""
    elems, leq = lattice_of_opens(n, rel)
    m = len(elems)
    empty_index = elems.index(frozenset())
    out = []
    for bits in range(1, 1 << m):
        sub = frozenset(i for i in range(m) if bits >> i & 1)
        if empty_index in sub:
            continue
        if is_filter(m, leq, sub) and is_scott_open(m, leq, sub):
            out.append(frozenset(elems[i] for i in sub))
    return out


def way_below(m, leq, u, v):
    """u is way below v: every directed set with sup above v meets up(u)."""
    for bits in range(1, 1 << m):
        d = frozenset(i for i in range(m) if bits >> i & 1)
        if not is_directed(m, leq, d):
            continue
        ub = upper_bounds(m, leq, d)
        sups = [s for s in ub if all((s, t) in leq for t in ub)]
        if not sups:
            continue
        if (v, sups[0]) in leq and not any((u, d_elem) in leq for d_elem in d):
            return False
    return True


def topology_from_subbase(m, generators):
    """Generate a topology on range(m) from subbasic sets.  Tiny m only."""
    full = frozenset(range(m))
    ints = {full}
    frontier = list(generators)
    for g in frontier:
        ints.add(frozenset(g))
    changed = True
    while changed:
        changed = False
        for a in list(ints):
            for b in list(ints):
                c = a & b
                if c not in ints:
                    ints.add(c)
                    changed = True
    opens = set(ints)
    opens.add(frozenset())
    changed = True
    while changed:
        changed = False
        for a in list(opens):
            for b in list(opens):
                c = a | b
                if c not in opens:
                    opens.add(c)
                    changed = True
    return opens


# Named instances, as (n, cover pairs).  Elements are 0-based indices;
# comments give the reading used throughout the tests.

CHAIN2 = (2, [(0, 1)])                      # 0 < 1
ANTICHAIN2 = (2, [])                        # two incomparable points
LAMBDA = (3, [(0, 1), (0, 2)])              # bottom 0 under incomparable 1, 2
VEE = (3, [(0, 2), (1, 2)])                 # incomparable 0, 1 under top 2
DIAMOND = (4, [(0, 1), (0, 2), (1, 3), (2, 3)])  # 0 < 1,2 < 3

NAMED = {
    "chain2": CHAIN2,
    "antichain2": ANTICHAIN2,
    "lambda": LAMBDA,
    "vee": VEE,
    "diamond": DIAMOND,
}


def named_relation(name):
    n, covers = NAMED[name]
    return n, reflexive_transitive_closure(n, covers)
