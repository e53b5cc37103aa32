"""Rudin sets and well-filtered-determined sets.

A closed set A is a Rudin set when some filtered family of compact saturated
sets has A among the minimal closed sets meeting every member.  A closed set
is WD when every continuous map into a well-filtered space sends it to a set
with an irreducible closure having a unique generic point.  On a finite space
both families collapse to the point closures, because finite spaces are
well-filtered; the collapse is exercised against exhaustive definitional
search in the tests rather than assumed.
"""

from dataclasses import dataclass

from .errors import CapExceededError, OrderError, UnsupportedOperationError
from .poset import bits_of, sorted_masks
from .powerspace import smyth_irreducible
from .space import (
    CofiniteTails,
    DEFAULT_CAPS,
    FinOrCofinSet,
    as_space,
    is_irreducible,
)


class FilteredFamily:
    """A filtered family of compact saturated sets, validated on construction.

    Finite spaces: members are masks (nonempty saturated sets), and any two
    members must contain a member inside their intersection, which is the same
    as irreducibility in the Smyth power space.  Cofinite space: members are
    FinOrCofinSet values (every nonempty subset is compact saturated there),
    or the symbolic CofiniteTails family of all cofinite sets.
    """

    def __init__(self, space, members):
        space = as_space(space)
        self.space = space
        if members is CofiniteTails:
            if space.kind != "cofinite":
                raise OrderError("CofiniteTails lives on the cofinite space")
            self.members = CofiniteTails
            return
        members = list(members)
        if not members:
            raise OrderError("a filtered family must be nonempty")
        if space.kind == "finite":
            if not smyth_irreducible(space, members):
                raise OrderError(
                    "not filtered: two members have no member inside their intersection"
                )
            self.members = sorted_masks(set(members), space.n)
        else:
            for a in members:
                if not isinstance(a, FinOrCofinSet) or a.is_empty:
                    raise OrderError(
                        "cofinite-space members must be nonempty FinOrCofinSet values"
                    )
            for a in members:
                for b in members:
                    inter = a.intersect(b)
                    if not any(c.subset_of(inter) for c in members):
                        raise OrderError(
                            "not filtered: two members have no member inside "
                            "their intersection"
                        )
            self.members = tuple(members)

    @classmethod
    def principal(cls, space, x):
        """The one-member family {up(x)}."""
        space = as_space(space)
        if space.kind == "finite":
            return cls(space, [space.poset.up_masks[x]])
        return cls(space, [FinOrCofinSet.points(x)])

    @property
    def is_symbolic(self):
        return self.members is CofiniteTails

    def least_member(self):
        """Finite families always have one, by filteredness and induction."""
        if self.is_symbolic:
            raise UnsupportedOperationError(
                "the cofinite-tail family has no least member"
            )
        if self.space.kind == "finite":
            for k in self.members:
                if all(k & ~other == 0 for other in self.members):
                    return k
        else:
            for k in self.members:
                if all(k.subset_of(other) for other in self.members):
                    return k
        raise OrderError("explicit filtered family without a least member")

    def intersection(self):
        if self.is_symbolic:
            return FinOrCofinSet.points()  # empty: every point misses some tail
        if self.space.kind == "finite":
            inter = self.space.full
            for k in self.members:
                inter &= k
            return inter
        inter = FinOrCofinSet.whole()
        for k in self.members:
            inter = inter.intersect(k)
        return inter

    def describe(self):
        if self.is_symbolic:
            return CofiniteTails.describe()
        if self.space.kind == "finite":
            parts = [
                "{" + ", ".join(str(x) for x in self.space.describe(k)) + "}"
                for k in self.members
            ]
            return "{" + ", ".join(parts) + "}"
        return "{" + ", ".join(k.describe() for k in self.members) + "}"

    def __repr__(self):
        return f"FilteredFamily({self.describe()})"


def _as_family(space, family):
    if isinstance(family, FilteredFamily):
        return family
    return FilteredFamily(space, family)


def M_and_m(space, family):
    """Closed sets meeting every member of the family, and the inclusion-
    minimal ones among them.

    Finite spaces: exhaustive over the closed sets.  Cofinite space: only the
    symbolic CofiniteTails family is supported; its only closed set meeting
    every tail is the whole space (any finite set is dodged by the tail that
    removes it), so M = m = {X}.
    """
    space = as_space(space)
    family = _as_family(space, family)
    if space.kind == "cofinite":
        if not family.is_symbolic:
            raise UnsupportedOperationError(
                "M and m over explicit families on the cofinite space would "
                "enumerate infinitely many closed sets"
            )
        whole = FinOrCofinSet.whole()
        return [whole], [whole]
    if family.is_symbolic:
        raise OrderError("symbolic families live on the cofinite space")
    members = family.members
    big = [
        c
        for c in space.closed_masks()
        if c and all(c & k for k in members)
    ]
    minimal = [
        c
        for c in big
        if not any(d != c and d & ~c == 0 for d in big)
    ]
    return big, minimal


def topological_rudin_minimize(space, family, c_mask):
    """Given a filtered family and a closed set C meeting every member, return
    a minimal closed subset of C that still meets every member.

    Every such minimal set is irreducible (that is the topological Rudin
    lemma); this is asserted, not assumed.  Ties are broken canonically by
    characteristic vector, so the result is deterministic.
    """
    space = as_space(space)
    if space.kind != "finite":
        raise UnsupportedOperationError(
            "the minimizer enumerates closed subsets, which needs a finite space"
        )
    family = _as_family(space, family)
    if not space.is_closed(c_mask):
        raise OrderError(f"{space.describe(c_mask)} is not closed")
    for k in family.members:
        if not c_mask & k:
            raise OrderError(
                f"C = {space.describe(c_mask)} misses the member {space.describe(k)}"
            )
    candidates = [
        d
        for d in space.closed_masks()
        if d and d & ~c_mask == 0 and all(d & k for k in family.members)
    ]
    minimal = [
        d
        for d in candidates
        if not any(e != d and e & ~d == 0 for e in candidates)
    ]
    for d in minimal:
        if not is_irreducible(space, d):
            raise OrderError(
                f"minimal candidate {space.describe(d)} is not irreducible; "
                "this contradicts the topological Rudin lemma"
            )
    return sorted_masks(minimal, space.n)[0]


@dataclass(frozen=True)
class RudinWitness:
    """A filtered family exhibiting A as a minimal closed set meeting all."""

    family: FilteredFamily
    minimal_set: object

    def describe(self):
        return self.family.describe()


def is_rudin_set(space, a):
    """Whether a closed set has the Rudin property, with a witness family.

    Finite spaces: the Rudin sets are exactly the point closures (finite
    spaces are well-filtered, squeezing the whole hierarchy between point
    closures and irreducible closed sets); the witness for cl{x} is {up(x)},
    and minimality is re-checked rather than trusted.  Cofinite space: the
    Rudin sets are the singletons and the whole space, the latter witnessed
    by the cofinite-tail family.
    """
    space = as_space(space)
    if space.kind == "finite":
        if not space.is_closed(a):
            raise OrderError(f"{space.describe(a)} is not closed")
        if a == 0:
            return False, None
        top = space.poset.greatest(a)
        if top is None or space.poset.down_masks[top] != a:
            return False, None
        fam = FilteredFamily.principal(space, top)
        _, minimal = M_and_m(space, fam)
        if a not in minimal:
            raise OrderError("witness family lost its minimal set; internal bug")
        return True, RudinWitness(family=fam, minimal_set=a)
    if not space.is_closed(a):
        raise OrderError(f"{a.describe()} is not closed in the cofinite space")
    if a.is_whole:
        fam = FilteredFamily(space, CofiniteTails)
        return True, RudinWitness(family=fam, minimal_set=a)
    if a.is_empty:
        return False, None
    if len(a.support) == 1:
        (x,) = a.support
        return True, RudinWitness(
            family=FilteredFamily.principal(space, x), minimal_set=a
        )
    return False, None


def rudin_family(space, caps=DEFAULT_CAPS):
    """RD(X) on a finite space: the closed sets with the Rudin property."""
    space = as_space(space)
    _guard_enumeration(space, caps)
    out = [c for c in space.closed_masks() if c and is_rudin_set(space, c)[0]]
    return sorted_masks(out, space.n)


def _guard_enumeration(space, caps):
    if space.kind != "finite":
        raise UnsupportedOperationError(
            "family listing on the cofinite space is infinite; query wd_status "
            "or is_rudin_set per set instead"
        )
    if space.n > caps.max_carrier:
        raise CapExceededError(
            f"family enumeration needs carrier <= {caps.max_carrier}, got {space.n}"
        )


WD_YES = "Yes"
WD_NO = "No"
WD_YES_BY_INCLUSION = "YesByInclusion"
WD_UNKNOWN = "Unknown"


@dataclass(frozen=True)
class WdReport:
    status: str
    reason: str
    witness: object = None


def wd_status(space, a):
    """Whether a closed set is well-filtered determined.

    The decision ladder: sets that are not irreducible closed are No; on the
    two supported kinds an exact procedure then settles the rest, so the
    verdicts YesByInclusion (membership forced by the Rudin property alone)
    and Unknown are reserved for kinds without an exact procedure and are
    never produced here.

    Finite spaces are well-filtered, so their WD sets are exactly the point
    closures, which are exactly the irreducible closed sets.  On the cofinite
    space the WD sets are the singletons and the whole space.
    """
    space = as_space(space)
    if space.kind == "finite":
        if not space.is_closed(a):
            raise OrderError(f"{space.describe(a)} is not closed")
        if not is_irreducible(space, a):
            return WdReport(WD_NO, "not an irreducible closed set")
        top = space.poset.greatest(a)
        return WdReport(
            WD_YES,
            "finite spaces are well-filtered, so the WD sets are the point "
            f"closures; A = cl{{{space.poset.label_of(top)}}}",
        )
    if not space.is_closed(a):
        raise OrderError(f"{a.describe()} is not closed in the cofinite space")
    if not is_irreducible(space, a):
        return WdReport(WD_NO, "not an irreducible closed set")
    if a.is_whole:
        ok, wit = is_rudin_set(space, a)
        return WdReport(
            WD_YES,
            "the whole space is a Rudin set via the cofinite-tail family, "
            "and Rudin sets are WD",
            witness=wit,
        )
    return WdReport(WD_YES, "a singleton is a point closure, hence WD")


def wd_family(space, caps=DEFAULT_CAPS):
    """WD(X) on a finite space."""
    space = as_space(space)
    _guard_enumeration(space, caps)
    out = [
        c
        for c in space.closed_masks()
        if c and wd_status(space, c).status == WD_YES
    ]
    return sorted_masks(out, space.n)
