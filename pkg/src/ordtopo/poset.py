"""Finite partial orders over dense integer carriers.

Elements of an n-element poset are the integers 0..n-1; optional labels are
display metadata only.  Subsets are int bitmasks (bit i set means element i
is in the subset), which keeps exhaustive enumeration over all 2^n subsets
cheap.  The relation itself is a read-only numpy boolean matrix.

All objects are immutable after construction and safe to share.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import OrderError


def bits_of(mask):
    """Yield the element indices of a bitmask subset, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements):
    m = 0
    for e in elements:
        m |= 1 << int(e)  # numpy indices would otherwise poison the mask
    return m


def subset_key(mask, n):
    """Characteristic vector of the subset, the canonical sort key."""
    return tuple(mask >> i & 1 for i in range(n))


def sorted_masks(masks, n):
    return sorted(masks, key=lambda m: subset_key(m, n))


class FinPoset:
    """A finite poset; the relation is validated eagerly at construction."""

    def __init__(self, leq, labels=None):
        leq = np.asarray(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise OrderError("leq must be a square boolean matrix")
        n = leq.shape[0]
        if not leq.diagonal().all():
            raise OrderError("relation is not reflexive")
        asym = leq & leq.T & ~np.eye(n, dtype=bool)
        if asym.any():
            i, j = map(int, np.argwhere(asym)[0])
            raise OrderError(f"relation is not antisymmetric: {i} <= {j} <= {i}")
        comp = (leq.astype(np.uint8) @ leq.astype(np.uint8)) > 0
        if (comp & ~leq).any():
            i, j = map(int, np.argwhere(comp & ~leq)[0])
            raise OrderError(f"relation is not transitive: misses {i} <= {j}")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise OrderError("labels length does not match carrier size")
        leq = leq.copy()
        leq.flags.writeable = False
        self.n = n
        self.leq = leq
        self.labels = labels

    @classmethod
    def from_cover_pairs(cls, n, pairs, labels=None):
        """Build from strict pairs ``i < j``; the closure is taken here.

        Any set of strict pairs whose closure stays antisymmetric is
        accepted, not only covers; a cycle surfaces as an OrderError.
        """
        leq = np.eye(n, dtype=bool)
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise OrderError(f"pair ({i}, {j}) outside carrier 0..{n - 1}")
            if i == j:
                raise OrderError(f"strict pair ({i}, {j}) is reflexive")
            leq[i, j] = True
        for k in range(n):
            leq |= np.outer(leq[:, k], leq[k, :])
        return cls(leq, labels)

    @property
    def full(self):
        """Bitmask of the whole carrier."""
        return (1 << self.n) - 1

    @cached_property
    def up_masks(self):
        return tuple(mask_of(np.flatnonzero(self.leq[i])) for i in range(self.n))

    @cached_property
    def down_masks(self):
        return tuple(mask_of(np.flatnonzero(self.leq[:, i])) for i in range(self.n))

    def le(self, i, j):
        return bool(self.leq[i, j])

    def down(self, mask):
        out = 0
        for i in bits_of(mask):
            out |= self.down_masks[i]
        return out

    def up(self, mask):
        out = 0
        for i in bits_of(mask):
            out |= self.up_masks[i]
        return out

    def upper_bounds(self, mask):
        # bounds of the empty subset are the whole carrier, vacuously
        out = self.full
        for i in bits_of(mask):
            out &= self.up_masks[i]
        return out

    def lower_bounds(self, mask):
        out = self.full
        for i in bits_of(mask):
            out &= self.down_masks[i]
        return out

    def is_lower(self, mask):
        return self.down(mask) == mask

    def is_upper(self, mask):
        return self.up(mask) == mask

    def is_directed(self, mask):
        if not mask:
            return False
        elems = list(bits_of(mask))
        up = self.up_masks
        return all(up[x] & up[y] & mask for x in elems for y in elems)

    def maximal(self, mask):
        return mask_of(
            x for x in bits_of(mask) if self.up_masks[x] & mask == 1 << x
        )

    def minimal(self, mask):
        return mask_of(
            x for x in bits_of(mask) if self.down_masks[x] & mask == 1 << x
        )

    def greatest(self, mask):
        """The greatest element of the subset, or None."""
        top = self.maximal(mask)
        if top and not (top & (top - 1)) and (self.down_masks[top.bit_length() - 1] & mask) == mask:
            return top.bit_length() - 1
        return None

    def least(self, mask):
        bot = self.minimal(mask)
        if bot and not (bot & (bot - 1)) and (self.up_masks[bot.bit_length() - 1] & mask) == mask:
            return bot.bit_length() - 1
        return None

    def least_upper_bound(self, mask):
        """Index of the supremum if it exists, else None."""
        return self.least(self.upper_bounds(mask))

    def up_set_masks(self):
        """All upper sets, in characteristic-vector order.  O(2^n)."""
        out = [m for m in range(1 << self.n) if self.is_upper(m)]
        return sorted_masks(out, self.n)

    def lower_set_masks(self):
        out = [m for m in range(1 << self.n) if self.is_lower(m)]
        return sorted_masks(out, self.n)

    def elements(self, mask):
        return tuple(bits_of(mask))

    def mask(self, elements):
        m = mask_of(elements)
        if m >> self.n:
            raise OrderError("element outside carrier")
        return m

    def label_of(self, i):
        return self.labels[i] if self.labels else str(i)

    def describe(self, mask):
        """Sorted element list for reports and witnesses."""
        return [self.label_of(i) for i in bits_of(mask)] if self.labels else list(bits_of(mask))

    def relabeled(self, perm):
        """Image poset under the permutation i -> perm[i]."""
        inv = np.argsort(perm)
        return FinPoset(self.leq[np.ix_(inv, inv)])

    def strict_pairs(self):
        return [
            (int(i), int(j))
            for i, j in np.argwhere(self.leq & ~np.eye(self.n, dtype=bool))
        ]

    def __eq__(self, other):
        return (
            isinstance(other, FinPoset)
            and self.n == other.n
            and np.array_equal(self.leq, other.leq)
        )

    def __hash__(self):
        return hash((self.n, self.leq.tobytes()))

    def __repr__(self):
        return f"FinPoset(n={self.n}, strict={self.strict_pairs()})"


@dataclass(frozen=True)
class OrderPredicates:
    is_directed: bool
    is_lower: bool
    is_upper: bool
    is_ideal: bool
    is_dcpo: bool
    is_noetherian: bool


# Definitional enumeration over all subsets stays below this carrier size;
# beyond it the finite-poset collapse applies (a finite directed set has a
# greatest element, so finite posets are dcpos and Noetherian outright; the
# collapse is exercised against the enumeration in the test suite).
_ENUM_LIMIT = 14


def closures(poset, a):
    """Down-closure and up-closure of the subset, as masks."""
    return poset.down(a), poset.up(a)


def bounds_and_cut(poset, a):
    """Upper bounds, lower bounds, and the cut (lower bounds of upper bounds).

    Bounds of the empty subset are the whole carrier.  The cut always
    contains the down-closure of the subset.
    """
    ub = poset.upper_bounds(a)
    lb = poset.lower_bounds(a)
    return ub, lb, poset.lower_bounds(ub)


def _is_dcpo(poset):
    if poset.n > _ENUM_LIMIT:
        return True
    return all(
        poset.least_upper_bound(m) is not None
        for m in range(1, 1 << poset.n)
        if poset.is_directed(m)
    )


def _is_noetherian(poset):
    if poset.n > _ENUM_LIMIT:
        return True
    return all(poset.maximal(m) for m in range(1, 1 << poset.n))


def order_predicates(poset, a):
    """Subset predicates plus the (necessarily true) whole-poset flags.

    Directedness requires the subset to be nonempty.  is_dcpo and
    is_noetherian quantify over the whole poset and are computed by
    definition for small carriers.
    """
    directed = poset.is_directed(a)
    lower = poset.is_lower(a)
    return OrderPredicates(
        is_directed=directed,
        is_lower=lower,
        is_upper=poset.is_upper(a),
        is_ideal=directed and lower,
        is_dcpo=_is_dcpo(poset),
        is_noetherian=_is_noetherian(poset),
    )


def extremes(poset, a):
    """Maximal and minimal elements of a nonempty subset."""
    if not a:
        raise OrderError("extremes of the empty subset are undefined")
    return poset.maximal(a), poset.minimal(a)
