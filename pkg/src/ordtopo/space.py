"""Topological view of finite T0 spaces and the symbolic cofinite space.

A finite T0 space is the Alexandroff space of its specialization poset: opens
are up-sets, closed sets are down-sets, and every topological notion becomes an
order computation on bitmasks.  The cofinite space (an infinite set with the
cofinite topology) is handled symbolically: its subsets are tagged
finite/cofinite objects and each query gets its own decision procedure instead
of an enumeration.
"""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import CapExceededError, OrderError, UnsupportedOperationError
from .poset import FinPoset, bits_of, sorted_masks


@dataclass(frozen=True)
class Caps:
    """Combinatorial guards for operations with exponential worst cases.

    max_carrier      largest finite carrier accepted for full enumerations
    max_powerspace   largest power-space carrier (|K(X)|, |C(X)|-1, ...)
    max_maps         refuse map enumeration when |Y|^|X| exceeds this
    max_product      refuse products larger than this many points
    max_family_base  largest base set whose subfamilies get enumerated
    """

    max_carrier: int = 12
    max_powerspace: int = 64
    max_maps: int = 100_000
    max_product: int = 4096
    max_family_base: int = 16


DEFAULT_CAPS = Caps()


class FiniteSpace:
    """Alexandroff space of a finite poset.  Subsets are int bitmasks."""

    kind = "finite"

    def __init__(self, poset):
        self.poset = poset
        self.n = poset.n

    @classmethod
    def of(cls, poset_or_space):
        if isinstance(poset_or_space, cls):
            return poset_or_space
        return cls(poset_or_space)

    @property
    def full(self):
        return self.poset.full

    def closure(self, mask):
        return self.poset.down(mask)

    def saturation(self, mask):
        return self.poset.up(mask)

    def interior(self, mask):
        m = 0
        for x in bits_of(self.full):
            if self.poset.up_masks[x] & ~mask == 0:
                m |= 1 << x
        return m

    def is_closed(self, mask):
        return self.poset.is_lower(mask)

    def is_open(self, mask):
        return self.poset.is_upper(mask)

    def open_masks(self):
        return self.poset.up_set_masks()

    def closed_masks(self):
        return self.poset.lower_set_masks()

    def compact_saturated(self):
        """K(X): on a finite space every set is compact, so K(X) is exactly the
        nonempty saturated (= upper) sets."""
        return tuple(m for m in self.poset.up_set_masks() if m)

    def describe(self, mask):
        return self.poset.describe(mask)

    def __repr__(self):
        return f"FiniteSpace({self.poset!r})"


@dataclass(frozen=True)
class FinOrCofinSet:
    """Subset of the cofinite space: either a finite set of points or the
    complement of one.  Points are symbolic labels (strings)."""

    tag: str  # "finite" | "cofinite"
    support: frozenset = frozenset()

    def __post_init__(self):
        if self.tag not in ("finite", "cofinite"):
            raise OrderError(f"bad subset tag {self.tag!r}")
        object.__setattr__(self, "support", frozenset(self.support))

    @classmethod
    def points(cls, *names):
        return cls("finite", frozenset(names))

    @classmethod
    def whole(cls):
        return cls("cofinite", frozenset())

    @classmethod
    def without(cls, *names):
        return cls("cofinite", frozenset(names))

    @property
    def is_empty(self):
        return self.tag == "finite" and not self.support

    @property
    def is_whole(self):
        return self.tag == "cofinite" and not self.support

    @property
    def is_finite(self):
        return self.tag == "finite"

    def size(self):
        return len(self.support) if self.tag == "finite" else None

    def complement(self):
        other = "cofinite" if self.tag == "finite" else "finite"
        return FinOrCofinSet(other, self.support)

    def contains(self, point):
        if self.tag == "finite":
            return point in self.support
        return point not in self.support

    def intersect(self, other):
        a, b = self, other
        if a.tag == "finite" and b.tag == "finite":
            return FinOrCofinSet("finite", a.support & b.support)
        if a.tag == "finite":
            return FinOrCofinSet("finite", a.support - b.support)
        if b.tag == "finite":
            return FinOrCofinSet("finite", b.support - a.support)
        return FinOrCofinSet("cofinite", a.support | b.support)

    def union(self, other):
        return self.complement().intersect(other.complement()).complement()

    def subset_of(self, other):
        a, b = self, other
        if a.tag == "finite" and b.tag == "finite":
            return a.support <= b.support
        if a.tag == "finite":
            return not (a.support & b.support)
        if b.tag == "finite":
            return False  # a cofinite set is infinite
        return b.support <= a.support

    def describe(self):
        names = ", ".join(sorted(self.support))
        if self.tag == "finite":
            return "{" + names + "}"
        if not self.support:
            return "X"
        return "X minus {" + names + "}"


class _CofiniteTails:
    """The filtered family {X \\ F : F finite} on the cofinite space.  Every
    member is compact (the space is T1 and every subset is compact) and the
    family is filtered with empty intersection."""

    def __repr__(self):
        return "CofiniteTails"

    def describe(self):
        return "all cofinite subsets {X \\ F : F finite}"


CofiniteTails = _CofiniteTails()


class CofiniteSpace:
    """Countably infinite set with the cofinite topology, handled symbolically.

    Closed sets are the finite sets together with the whole space; the
    specialization order is discrete (the space is T1).  Points are the labels
    "x0", "x1", ... but any string is accepted as a point.
    """

    kind = "cofinite"

    def __init__(self, name="cofinite"):
        self.name = name

    def point(self, i):
        return f"x{i}"

    def closure(self, a):
        self._check(a)
        if a.tag == "cofinite" and not a.is_whole:
            # the only closed superset of an infinite set is the whole space
            return FinOrCofinSet.whole()
        return a

    def saturation(self, a):
        self._check(a)
        return a  # T1: every set is saturated

    def interior(self, a):
        self._check(a)
        if a.tag == "cofinite":
            return a
        return FinOrCofinSet("finite", frozenset())

    def is_closed(self, a):
        self._check(a)
        return a.is_finite or a.is_whole

    def is_open(self, a):
        self._check(a)
        return a.tag == "cofinite" or a.is_empty

    def is_compact(self, a):
        self._check(a)
        return True  # every subset of a cofinite space is compact

    def _check(self, a):
        if not isinstance(a, FinOrCofinSet):
            raise OrderError(
                "subsets of the cofinite space must be FinOrCofinSet values"
            )

    def __repr__(self):
        return f"CofiniteSpace({self.name!r})"


def as_space(obj):
    """Accept a FinPoset, FiniteSpace or CofiniteSpace."""
    if isinstance(obj, (FiniteSpace, CofiniteSpace)):
        return obj
    if isinstance(obj, FinPoset):
        return FiniteSpace(obj)
    raise OrderError(f"not a space: {obj!r}")


def topology_ops(space, a):
    """(closure, interior, saturation) of a subset, dispatched on kind."""
    space = as_space(space)
    return space.closure(a), space.interior(a), space.saturation(a)


def is_irreducible(space, a):
    """Whether a nonempty subset is irreducible (meets U and V open implies it
    meets U & V).

    Finite spaces: A is irreducible iff its closure is a directed down-set,
    equivalently iff A itself is directed under specialization.  Cofinite
    space: the irreducible subsets are the singletons and the infinite sets
    (any two nonempty opens of an infinite cofinite subspace intersect).
    """
    space = as_space(space)
    if space.kind == "finite":
        if a == 0:
            return False
        return space.poset.is_directed(space.closure(a))
    space._check(a)
    if a.is_empty:
        return False
    if a.tag == "cofinite":
        return True
    return len(a.support) == 1


class SymbolicFamily:
    """Description of an infinite family of subsets of the cofinite space.

    Carries a one-line description and a membership test; asking for a
    materialized listing raises, since the family is infinite.
    """

    def __init__(self, description, member_test):
        self.description = description
        self._member_test = member_test

    def contains(self, a):
        return self._member_test(a)

    def describe(self):
        return self.description

    def materialize(self):
        raise UnsupportedOperationError(
            f"cannot materialize an infinite family: {self.description}"
        )

    def __repr__(self):
        return f"SymbolicFamily({self.description!r})"


@dataclass(frozen=True)
class Families:
    """The four structure families of a space.

    irr_c  irreducible closed sets
    sc     point closures
    dc     closures of directed sets
    k      compact saturated sets

    Finite spaces: tuples of masks in canonical order.  Cofinite space:
    SymbolicFamily values (the families are infinite).
    """

    irr_c: object
    sc: object
    dc: object
    k: object


def enumerate_families(space, caps=DEFAULT_CAPS):
    space = as_space(space)
    if space.kind == "cofinite":
        def closed_irr(a):
            return space.is_closed(a) and is_irreducible(space, a)

        def singleton(a):
            return a.is_finite and len(a.support) == 1

        return Families(
            irr_c=SymbolicFamily(
                "singletons and the whole space", closed_irr
            ),
            sc=SymbolicFamily("singletons {x} = cl{x}", singleton),
            dc=SymbolicFamily(
                "singletons (directed sets in a discrete order are singletons)",
                singleton,
            ),
            k=SymbolicFamily(
                "all nonempty subsets (every subset is compact and saturated)",
                lambda a: not a.is_empty,
            ),
        )
    if space.n > caps.max_carrier:
        raise CapExceededError(
            f"family enumeration needs carrier <= {caps.max_carrier}, got {space.n}"
        )
    poset = space.poset
    n = space.n
    sc = sorted_masks({poset.down_masks[x] for x in range(n)}, n)
    dc = set()
    for m in range(1, 1 << n):
        if poset.is_directed(m):
            dc.add(poset.down(m))
    dc = sorted_masks(dc, n)
    irr_c = sorted_masks(
        {m for m in space.closed_masks() if m and poset.is_directed(m)}, n
    )
    k = sorted_masks(space.compact_saturated(), n)
    return Families(irr_c=irr_c, sc=sc, dc=dc, k=k)


def generic_points(space, closed_mask):
    """Points x with cl{x} equal to the given closed set."""
    space = as_space(space)
    return [
        x
        for x in bits_of(space.full)
        if space.poset.down_masks[x] == closed_mask
    ]


def is_sober_finite(space):
    """Every irreducible closed set is the closure of exactly one point.
    Definitional scan; finite T0 spaces always satisfy it."""
    space = as_space(space)
    for c in space.closed_masks():
        if c and space.poset.is_directed(c):
            if len(generic_points(space, c)) != 1:
                return False
    return True


def min_of_compact(space, k_mask):
    """Minimal points of a compact saturated set; checks K = up(min K)."""
    space = as_space(space)
    if k_mask == 0 or not space.poset.is_upper(k_mask):
        raise OrderError("expected a nonempty saturated (upper) set")
    m = space.poset.minimal(k_mask)
    if space.saturation(m) != k_mask:
        raise OrderError("saturation of the minimal points does not recover K")
    return m


def is_supercompact(space, k_mask):
    """K is supercompact iff K = up(x) for a single x; on a finite space iff
    K has a least element."""
    space = as_space(space)
    if k_mask == 0 or not space.poset.is_upper(k_mask):
        raise OrderError("expected a nonempty saturated (upper) set")
    return space.poset.least(k_mask) is not None


def continuous_maps(x_space, y_space, caps=DEFAULT_CAPS):
    """All continuous maps X -> Y between finite spaces, as tuples f with
    f[i] = image of i.  Continuity between Alexandroff spaces is monotonicity;
    enumeration is a lexicographic backtracking over prefixes, so only
    monotone prefixes are ever extended.
    """
    x_space, y_space = as_space(x_space), as_space(y_space)
    if x_space.kind != "finite" or y_space.kind != "finite":
        raise UnsupportedOperationError("map enumeration needs finite spaces")
    nx, ny = x_space.n, y_space.n
    if nx and ny ** nx > caps.max_maps:
        raise CapExceededError(
            f"|Y|^|X| = {ny}^{nx} exceeds the map cap {caps.max_maps}"
        )
    if nx == 0:
        return [()]
    if ny == 0:
        return []
    px, py = x_space.poset, y_space.poset
    out = []
    f = [0] * nx

    def extend(i):
        if i == nx:
            out.append(tuple(f))
            return
        for y in range(ny):
            ok = True
            for j in range(i):
                if px.le(j, i) and not py.le(f[j], y):
                    ok = False
                    break
                if px.le(i, j) and not py.le(y, f[j]):
                    ok = False
                    break
            if ok:
                f[i] = y
                extend(i + 1)

    extend(0)
    return out


def image_mask(f, mask):
    m = 0
    for x in bits_of(mask):
        m |= 1 << f[x]
    return m


def preimage_mask(f, mask, nx):
    m = 0
    for x in range(nx):
        if mask >> f[x] & 1:
            m |= 1 << x
    return m


@dataclass(frozen=True)
class ProductSpace:
    """Finite product with componentwise specialization order.

    components[p] is the tuple of factor coordinates of product point p;
    the index runs in row-major order (first factor slowest).
    """

    space: FiniteSpace
    factors: tuple
    components: tuple

    def project_point(self, i, p):
        return self.components[p][i]

    def project_mask(self, i, mask):
        m = 0
        for p in bits_of(mask):
            m |= 1 << self.components[p][i]
        return m

    def point_index(self, coords):
        sizes = [f.n for f in self.factors]
        p = 0
        for c, s in zip(coords, sizes):
            p = p * s + c
        return p


def product(spaces, caps=DEFAULT_CAPS):
    spaces = [as_space(s) for s in spaces]
    if not spaces:
        raise OrderError("empty product is not supported")
    if any(s.kind != "finite" for s in spaces):
        raise UnsupportedOperationError("products need finite factors")
    total = 1
    for s in spaces:
        total *= s.n
    if total > caps.max_product:
        raise CapExceededError(
            f"product carrier {total} exceeds the cap {caps.max_product}"
        )
    leq = np.ones((1, 1), dtype=bool)
    for s in spaces:
        leq = np.kron(leq, s.poset.leq)
    sizes = [s.n for s in spaces]
    components = []
    for p in range(total):
        c, rest = [], p
        for s in reversed(sizes):
            c.append(rest % s)
            rest //= s
        components.append(tuple(reversed(c)))
    return ProductSpace(
        space=FiniteSpace(FinPoset(leq)),
        factors=tuple(spaces),
        components=tuple(components),
    )


@dataclass(frozen=True)
class ClosedSubspace:
    """Closed subspace with its embedding: embedding[k] = index in the ambient
    space of the k-th subspace point."""

    space: FiniteSpace
    embedding: tuple

    def restrict_mask(self, ambient_mask):
        m = 0
        for k, x in enumerate(self.embedding):
            if ambient_mask >> x & 1:
                m |= 1 << k
        return m

    def extend_mask(self, sub_mask):
        m = 0
        for k in bits_of(sub_mask):
            m |= 1 << self.embedding[k]
        return m


def subspace_closed(space, closed_mask):
    """Subspace induced on a closed set.  The subspace topology of a closed
    subset of an Alexandroff space is the Alexandroff topology of the induced
    order, so the restriction of the order matrix is the whole structure."""
    space = as_space(space)
    if space.kind != "finite":
        raise UnsupportedOperationError("subspaces are computed on finite spaces")
    if not space.is_closed(closed_mask):
        raise OrderError(f"{space.describe(closed_mask)} is not closed")
    elems = space.poset.elements(closed_mask)
    idx = np.array(elems, dtype=int)
    if len(elems) == 0:
        return ClosedSubspace(
            space=FiniteSpace(FinPoset(np.zeros((0, 0), dtype=bool))),
            embedding=(),
        )
    labels = None
    if space.poset.labels is not None:
        labels = [space.poset.labels[x] for x in elems]
    sub = FinPoset(space.poset.leq[np.ix_(idx, idx)], labels=labels)
    return ClosedSubspace(space=FiniteSpace(sub), embedding=tuple(elems))


def add_top(space):
    """X with one new point on top; the new point's closure is the whole
    space, so the closed sets become C(X) plus the whole new carrier.

    Only finite spaces are supported: adding a top to the cofinite space
    produces a space that is neither finite nor cofinite, so there is no
    handle kind to return it as.
    """
    space = as_space(space)
    if space.kind != "finite":
        raise UnsupportedOperationError(
            "add_top on the cofinite space leaves the representable kinds"
        )
    n = space.n
    leq = np.zeros((n + 1, n + 1), dtype=bool)
    leq[:n, :n] = space.poset.leq
    leq[:, n] = True
    labels = None
    if space.poset.labels is not None:
        labels = list(space.poset.labels) + ["inf"]
    elif n > 0:
        labels = [str(i) for i in range(n)] + ["inf"]
    return FiniteSpace(FinPoset(leq, labels=labels))


def filtered_subfamilies(masks, caps=DEFAULT_CAPS, strict=False):
    """Nonempty filtered subfamilies of a finite family of sets (as masks).

    A family is filtered when any two members contain a member inside their
    intersection.  Exhaustive when the base is small, by a DFS that extends a
    family one member at a time: old witnesses survive extension, so only the
    pairs with the new member need witnesses.  Past the cap, falls back to a
    deterministic bounded collection (singletons, nested pairs, and nested
    triples through the full carrier) documented by the "bounded" tag;
    strict=True insists on the exhaustive regime.
    """
    base = sorted(set(masks))
    m = len(base)
    if m <= caps.max_family_base:
        # A witness c inside a & k satisfies c <= a & k < k as integers, so in
        # ascending member order every prefix of a filtered family is filtered
        # and witnesses always precede the pair they serve; checking only the
        # new pairs at each extension is therefore sound and complete.
        out = []
        fam = []

        def extend(start):
            if fam:
                out.append(tuple(fam))
            for i in range(start, m):
                k = base[i]
                ok = True
                for a in fam:
                    inter = a & k
                    if k & ~inter == 0:
                        continue  # k itself witnesses the pair
                    if not any(c & ~inter == 0 for c in fam):
                        ok = False
                        break
                if ok:
                    fam.append(k)
                    extend(i + 1)
                    fam.pop()

        extend(0)
        return out, "exhaustive"
    if strict:
        raise CapExceededError(
            f"filtered-family enumeration needs a base <= {caps.max_family_base}, got {m}"
        )
    out = [(k,) for k in base]
    full = max(base)
    pairs = []
    for a, b in combinations(base, 2):
        if a & b == a or a & b == b:
            pairs.append((a, b))
            out.append((a, b))
    for a, b in pairs:
        if full != a and full != b and is_filtered_family((a, b, full)):
            out.append((a, b, full))
    return out, "bounded"


def is_filtered_family(fam):
    """Any two members contain a member inside their intersection."""
    fam = tuple(fam)
    if not fam:
        return False
    for a, b in combinations(fam, 2):
        inter = a & b
        if not any(k & ~inter == 0 for k in fam):
            return False
    return True
