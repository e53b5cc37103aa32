"""Classification vectors and brute-force theorem verification.

Every flag on a finite space is computed by a definitional scan over the
relevant enumeration (directed sets, opens, closed sets, filtered families),
not by citing the theory; when a scan fails it returns a concrete witness.
The cofinite space gets a fixed vector whose false flags carry symbolic
witnesses.  The theorem registry re-checks the characterization theorems on a
given instance and reports pass, fail (with witness), or not-applicable.

Convenient finite collapses are used only where the tests verify them against
definitional enumerations: filtered families contain their least member,
way-below on the open-set lattice is inclusion, irreducible subsets are the
directed subsets, and the irreducible closed subsets of the Smyth power space
are the principal superset families.
"""

from dataclasses import dataclass, replace
from functools import lru_cache

from .catalog import all_posets, chain, vee_poset
from .errors import CapExceededError, OrderError, UnsupportedOperationError
from .poset import _is_dcpo, bits_of
from .powerspace import (
    hoare,
    open_filters_and_phi,
    power_order,
    smyth,
    union_map_check,
)
from .rudin import FilteredFamily, is_rudin_set, rudin_family, wd_family, wd_status, WD_YES
from .space import (
    DEFAULT_CAPS,
    CofiniteTails,
    FiniteSpace,
    add_top,
    as_space,
    continuous_maps,
    enumerate_families,
    filtered_subfamilies,
    generic_points,
    image_mask,
    is_sober_finite,
    product,
    subspace_closed,
)

FLAGS = (
    "t1",
    "d_space",
    "d_bounded",
    "well_filtered",
    "sober",
    "dc_space",
    "rudin_space",
    "wd_space",
    "locally_compact",
    "core_compact",
    "locally_hypercompact",
    "c_space",
    "ftip",
    "rip",
    "irreducible_complete",
    "r_bounded",
)


@dataclass(frozen=True)
class ClassificationVector:
    t1: bool
    d_space: bool
    d_bounded: bool
    well_filtered: bool
    sober: bool
    dc_space: bool
    rudin_space: bool
    wd_space: bool
    locally_compact: bool
    core_compact: bool
    locally_hypercompact: bool
    c_space: bool
    ftip: bool
    rip: bool
    irreducible_complete: bool
    r_bounded: bool

    def as_dict(self):
        return {name: getattr(self, name) for name in FLAGS}


@dataclass(frozen=True)
class Classification:
    kind: str
    vector: ClassificationVector
    witnesses: dict


IMPLICATIONS = (
    ("sober", "well_filtered"),
    ("well_filtered", "d_space"),
    ("sober", "dc_space"),
    ("dc_space", "rudin_space"),
    ("rudin_space", "wd_space"),
    ("c_space", "locally_hypercompact"),
    ("locally_hypercompact", "locally_compact"),
    ("locally_compact", "core_compact"),
    ("sober", "irreducible_complete"),
    ("irreducible_complete", "r_bounded"),
    ("sober", "rip"),
    ("rip", "ftip"),
    ("well_filtered", "ftip"),
)


def check_implications(vector):
    """Implication edges violated by the vector; a sound vector has none."""
    return [
        (a, b)
        for a, b in IMPLICATIONS
        if getattr(vector, a) and not getattr(vector, b)
    ]


class _Ctx:
    """Shared enumerations for one finite instance."""

    def __init__(self, space, caps=DEFAULT_CAPS):
        self.space = as_space(space)
        if self.space.kind != "finite":
            raise OrderError("classification context needs a finite space")
        self.caps = caps
        self.poset = self.space.poset
        self.n = self.poset.n
        if self.n > caps.max_carrier:
            # the open/closed sweeps below are O(2^n); refuse before them
            raise CapExceededError(
                f"carrier {self.n} exceeds the enumeration cap {caps.max_carrier}"
            )
        self.full = self.poset.full
        self.opens = self.space.open_masks()
        self.closed = self.space.closed_masks()
        fams = enumerate_families(self.space, caps)
        self.irr_c = fams.irr_c
        self.sc = fams.sc
        self.dc = fams.dc
        self.k = fams.k
        # on a finite Alexandroff space a subset is irreducible iff directed:
        # up(a) and up(b) both meet A, so irreducibility yields a bound in A
        self.directed = tuple(
            m for m in range(1, 1 << self.n) if self.poset.is_directed(m)
        )
        self._up_cache = {}
        self._witness = {}
        self._filtered = None

    def up(self, mask):
        hit = self._up_cache.get(mask)
        if hit is None:
            hit = self.poset.up(mask)
            self._up_cache[mask] = hit
        return hit

    def filtered_families(self):
        if self._filtered is None:
            self._filtered = filtered_subfamilies(self.k, self.caps)
        return self._filtered

    def describe(self, mask):
        return self.space.describe(mask)

    def witness(self, flag):
        if flag not in self._witness:
            self._witness[flag] = _FLAG_CHECKS[flag](self)
        return self._witness[flag]

    def flag(self, name):
        return self.witness(name) is None


def _chk_t1(ctx):
    for i in range(ctx.n):
        for j in range(ctx.n):
            if i != j and ctx.poset.le(i, j):
                return {
                    "pair": [ctx.poset.label_of(i), ctx.poset.label_of(j)],
                    "detail": "distinct comparable points deny T1",
                }
    return None


def _chk_d_space(ctx):
    if not _is_dcpo(ctx.poset):
        return {"detail": "specialization order is not a dcpo"}
    for d in ctx.directed:
        g = ctx.poset.greatest(d)
        if g is None:
            return {
                "set": ctx.describe(d),
                "detail": "directed set without a greatest element",
            }
        for u in ctx.opens:
            if u >> g & 1 and not d & u:
                return {
                    "open": ctx.describe(u),
                    "set": ctx.describe(d),
                    "detail": "open set is not Scott-open",
                }
    return None


def _chk_d_bounded(ctx):
    for d in ctx.directed:
        if not ctx.poset.upper_bounds(d):
            return {"set": ctx.describe(d), "detail": "directed set without an upper bound"}
    return None


def _chk_well_filtered(ctx):
    fams, mode = ctx.filtered_families()
    for fam in fams:
        inter = ctx.full
        for k in fam:
            inter &= k
        if inter in fam:
            continue  # the least member witnesses every open around the intersection
        for u in ctx.opens:
            if inter & ~u == 0 and not any(k & ~u == 0 for k in fam):
                return {
                    "family": [ctx.describe(k) for k in fam],
                    "open": ctx.describe(u),
                    "detail": f"filtered family dodges the open ({mode} families)",
                }
    return None


def _chk_sober(ctx):
    for c in ctx.irr_c:
        pts = generic_points(ctx.space, c)
        if len(pts) != 1:
            return {
                "set": ctx.describe(c),
                "generic_points": [ctx.poset.label_of(x) for x in pts],
                "detail": "irreducible closed set without a unique generic point",
            }
    return None


def _chk_dc_space(ctx):
    extra = set(ctx.irr_c) - set(ctx.dc)
    if extra:
        a = min(extra)
        return {
            "set": ctx.describe(a),
            "detail": "irreducible closed set that is no directed closure",
        }
    return None


def _chk_rudin_space(ctx):
    for a in ctx.irr_c:
        if not is_rudin_set(ctx.space, a)[0]:
            return {
                "set": ctx.describe(a),
                "detail": "irreducible closed set without the Rudin property",
            }
    return None


def _chk_wd_space(ctx):
    for a in ctx.irr_c:
        if wd_status(ctx.space, a).status != WD_YES:
            return {
                "set": ctx.describe(a),
                "detail": "irreducible closed set that is not WD",
            }
    return None


def _chk_locally_compact(ctx):
    for x in range(ctx.n):
        for u in ctx.opens:
            if not (u >> x & 1):
                continue
            # up(x) is open in an Alexandroff space, so it is its own interior
            k = ctx.poset.up_masks[x]
            if ctx.space.interior(k) >> x & 1 and k & ~u == 0:
                continue
            if not any(
                ctx.space.interior(kk) >> x & 1 and kk & ~u == 0 for kk in ctx.k
            ):
                return {
                    "point": ctx.poset.label_of(x),
                    "open": ctx.describe(u),
                    "detail": "no compact saturated neighborhood inside the open",
                }
    return None


def _chk_core_compact(ctx):
    # way-below on the finite complete lattice O(X) is inclusion
    for v in ctx.opens:
        cover = 0
        for u in ctx.opens:
            if u & ~v == 0:
                cover |= u
        if cover != v:
            return {
                "open": ctx.describe(v),
                "detail": "open set is not the union of its way-below opens",
            }
    return None


def _chk_locally_hypercompact(ctx):
    for x in range(ctx.n):
        for u in ctx.opens:
            if not (u >> x & 1):
                continue
            found = any(
                ctx.space.interior(ctx.up(f)) >> x & 1 and ctx.up(f) & ~u == 0
                for f in _finite_subsets_of(u)
            )
            if not found:
                return {
                    "point": ctx.poset.label_of(x),
                    "open": ctx.describe(u),
                    "detail": "no finitary saturated neighborhood inside the open",
                }
    return None


def _finite_subsets_of(u):
    # singletons suffice as candidates in an Alexandroff space; kept as a
    # generator so the scan stays a genuine search
    for x in bits_of(u):
        yield 1 << x


def _chk_c_space(ctx):
    for x in range(ctx.n):
        for u in ctx.opens:
            if not (u >> x & 1):
                continue
            if not any(
                ctx.space.interior(ctx.poset.up_masks[p]) >> x & 1
                and ctx.poset.up_masks[p] & ~u == 0
                for p in bits_of(u)
            ):
                return {
                    "point": ctx.poset.label_of(x),
                    "open": ctx.describe(u),
                    "detail": "no point p in U with x in int(up(p))",
                }
    return None


def _chk_ftip(ctx):
    fams, mode = ctx.filtered_families()
    for fam in fams:
        inter = ctx.full
        for k in fam:
            inter &= k
        if inter == 0:
            return {
                "family": [ctx.describe(k) for k in fam],
                "detail": f"filtered family with empty intersection ({mode})",
            }
    return None


def _chk_rip(ctx):
    # irreducible subsets of the Smyth power space are the filtered families;
    # its irreducible closed subsets are the principal superset families, and
    # the meet remark makes the closed ones decisive
    open_witness = _chk_ftip(ctx)
    if open_witness is not None:
        return open_witness
    for k in ctx.k:
        inter = ctx.full
        for kk in ctx.k:
            if k & ~kk == 0:
                inter &= kk
        if inter == 0:
            return {
                "family": f"supersets of {ctx.describe(k)}",
                "detail": "irreducible closed family with empty intersection",
            }
    return None


def _chk_irreducible_complete(ctx):
    for a in ctx.directed:
        if ctx.poset.least_upper_bound(a) is None:
            return {
                "set": ctx.describe(a),
                "detail": "irreducible subset without a supremum",
            }
    return None


def _chk_r_bounded(ctx):
    for a in ctx.directed:
        if not ctx.poset.upper_bounds(a):
            return {
                "set": ctx.describe(a),
                "detail": "irreducible subset without an upper bound",
            }
    return None


_FLAG_CHECKS = {
    "t1": _chk_t1,
    "d_space": _chk_d_space,
    "d_bounded": _chk_d_bounded,
    "well_filtered": _chk_well_filtered,
    "sober": _chk_sober,
    "dc_space": _chk_dc_space,
    "rudin_space": _chk_rudin_space,
    "wd_space": _chk_wd_space,
    "locally_compact": _chk_locally_compact,
    "core_compact": _chk_core_compact,
    "locally_hypercompact": _chk_locally_hypercompact,
    "c_space": _chk_c_space,
    "ftip": _chk_ftip,
    "rip": _chk_rip,
    "irreducible_complete": _chk_irreducible_complete,
    "r_bounded": _chk_r_bounded,
}

_TAILS = CofiniteTails.describe()

_COFINITE_WITNESSES = {
    "well_filtered": {
        "family": _TAILS,
        "open": "{}",
        "detail": "the tails are filtered compact saturated sets with empty "
        "intersection, so the intersection lies in the empty open while no "
        "single tail does",
    },
    "sober": {
        "set": "X",
        "detail": "X is irreducible closed (any two nonempty cofinite opens "
        "meet) but cl{x} = {x} for every point, so X has no generic point",
    },
    "dc_space": {
        "set": "X",
        "detail": "X is irreducible closed, but directed sets of the discrete "
        "specialization order are singletons with singleton closures",
    },
    "locally_hypercompact": {
        "point": "x0",
        "open": "X",
        "detail": "for finite F the saturation up(F) = F has empty interior, "
        "so x0 is never in int(up(F))",
    },
    "c_space": {
        "point": "x0",
        "open": "X",
        "detail": "up(u) = {u} has empty interior for every point u",
    },
    "ftip": {
        "family": _TAILS,
        "detail": "a filtered family of compact saturated sets with empty "
        "intersection",
    },
    "rip": {
        "family": _TAILS,
        "detail": "the tails are filtered, hence an irreducible subset of the "
        "Smyth power space, and their intersection is empty",
    },
    "irreducible_complete": {
        "set": "X",
        "detail": "X is irreducible but the discrete specialization order "
        "gives it no upper bound, hence no supremum",
    },
    "r_bounded": {
        "set": "X",
        "detail": "X is irreducible and has no upper bound in the discrete "
        "specialization order",
    },
}

_COFINITE_VECTOR = ClassificationVector(
    t1=True,
    d_space=True,
    d_bounded=True,
    well_filtered=False,
    sober=False,
    dc_space=False,
    rudin_space=True,
    wd_space=True,
    locally_compact=True,
    core_compact=True,
    locally_hypercompact=False,
    c_space=False,
    ftip=False,
    rip=False,
    irreducible_complete=False,
    r_bounded=False,
)


def classify(space, caps=DEFAULT_CAPS):
    """Compute the full flag vector with witnesses for the false flags."""
    space = as_space(space)
    if space.kind == "cofinite":
        vector = _COFINITE_VECTOR
        witnesses = dict(_COFINITE_WITNESSES)
    else:
        ctx = _Ctx(space, caps)
        values = {}
        witnesses = {}
        for name in FLAGS:
            w = ctx.witness(name)
            values[name] = w is None
            if w is not None:
                witnesses[name] = w
        vector = ClassificationVector(**values)
    bad = check_implications(vector)
    if bad:
        raise OrderError(f"classification violates implications: {bad}")
    return Classification(kind=space.kind, vector=vector, witnesses=witnesses)


# ---------------------------------------------------------------------------
# equational probes

EQUATIONS = ("d-space.upper-eq", "wf.upper-eq", "sober.upper-eq")


@dataclass(frozen=True)
class EquationProbe:
    equation: str
    lhs: int
    rhs: int

    @property
    def holds(self):
        return self.lhs == self.rhs


def equational_probe(space, equation, bindings):
    """Evaluate one upper-set equation on explicit bindings.

    d-space.upper-eq: up(A & cut(D)) = AND_d up(A & up(d)), D directed, A closed
    wf.upper-eq:      up(A & meet(F)) = AND_K up(A & K), F a filtered family
    sober.upper-eq:   up(C & cut(A))  = AND_a up(C & up(a)), A irreducible, C closed
    """
    space = as_space(space)
    if space.kind != "finite":
        raise UnsupportedOperationError("equational probes evaluate finite masks")
    p = space.poset
    if equation == "d-space.upper-eq":
        d, a = bindings["directed"], bindings["closed"]
        if not p.is_directed(d):
            raise OrderError(f"binding 'directed' = {space.describe(d)} is not directed")
        if not space.is_closed(a):
            raise OrderError(f"binding 'closed' = {space.describe(a)} is not closed")
        lhs = p.up(a & p.upper_bounds(d))
        rhs = p.full
        for x in bits_of(d):
            rhs &= p.up(a & p.up_masks[x])
        return EquationProbe(equation, lhs, rhs)
    if equation == "wf.upper-eq":
        fam, a = bindings["family"], bindings["closed"]
        if not isinstance(fam, FilteredFamily):
            fam = FilteredFamily(space, fam)
        if not space.is_closed(a):
            raise OrderError(f"binding 'closed' = {space.describe(a)} is not closed")
        inter = p.full
        for k in fam.members:
            inter &= k
        lhs = p.up(a & inter)
        rhs = p.full
        for k in fam.members:
            rhs &= p.up(a & k)
        return EquationProbe(equation, lhs, rhs)
    if equation == "sober.upper-eq":
        a, c = bindings["irreducible"], bindings["closed"]
        if not p.is_directed(a):
            raise OrderError(
                f"binding 'irreducible' = {space.describe(a)} is not an "
                "irreducible subset (not directed)"
            )
        if not space.is_closed(c):
            raise OrderError(f"binding 'closed' = {space.describe(c)} is not closed")
        lhs = p.up(c & p.upper_bounds(a))
        rhs = p.full
        for x in bits_of(a):
            rhs &= p.up(c & p.up_masks[x])
        return EquationProbe(equation, lhs, rhs)
    raise OrderError(f"unknown equation {equation!r}; known: {EQUATIONS}")


# ---------------------------------------------------------------------------
# theorem reports

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    verdict: str
    detail: str = ""
    witness: object = None

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL, NOT_APPLICABLE):
            raise OrderError(f"bad verdict {self.verdict!r}")
        if self.verdict == FAIL and self.witness is None:
            raise OrderError("a failed theorem report needs a witness")


def _all_true(tid, conds, detail=""):
    if all(v for _, v in conds):
        return TheoremReport(tid, PASS, detail=detail)
    return TheoremReport(
        tid,
        FAIL,
        detail=detail,
        witness={"conditions": {name: v for name, v in conds}},
    )


def _all_equal(tid, conds, detail=""):
    values = {v for _, v in conds}
    if len(values) == 1:
        return TheoremReport(tid, PASS, detail=detail)
    return TheoremReport(
        tid,
        FAIL,
        detail=detail,
        witness={"conditions": {name: v for name, v in conds}},
    )


@lru_cache(maxsize=None)
def _map_targets(max_size=3):
    """All finite spaces with at most max_size points, up to isomorphism.
    Finite T0 spaces are sober and well-filtered, so these serve as the
    bounded target range for the map-quantified theorems."""
    out = []
    for n in range(1, max_size + 1):
        out.extend(FiniteSpace(p) for p in all_posets(n))
    return tuple(out)


_MAP_FAMILY_SAMPLE = 256
_EQ_FAMILY_SAMPLE = 500
_EQUIV_BASE_LIMIT = 12


def _family_upper_eq(ctx, coll):
    """up(A & meet(F)) = AND_K up(A & K) over filtered families F and A in coll.
    Exhaustive families below the cap; a deterministic sample above it."""
    fams, mode = ctx.filtered_families()
    if mode == "bounded":
        fams = fams[:_EQ_FAMILY_SAMPLE]
    for fam in fams:
        inter = ctx.full
        for k in fam:
            inter &= k
        for a in coll:
            lhs = ctx.up(a & inter)
            rhs = ctx.full
            for k in fam:
                rhs &= ctx.up(a & k)
            if lhs != rhs:
                return False, {
                    "family": [ctx.describe(k) for k in fam],
                    "closed": ctx.describe(a),
                }
    return True, None


def _map_family_equation(ctx):
    """up f(meet F) = AND_K up f(K) for continuous f into small targets and
    filtered families F (deterministic sample above the cap)."""
    fams, mode = ctx.filtered_families()
    sample = fams if mode == "exhaustive" else fams[:_MAP_FAMILY_SAMPLE]
    data = []
    for fam in sample:
        inter = ctx.full
        for k in fam:
            inter &= k
        data.append((fam, inter))
    for y in _map_targets():
        yup = y.poset.up_masks
        for f in continuous_maps(ctx.space, y, ctx.caps):
            cache = {}

            def simg(mask):
                # saturation of the image, memoized per map; masks repeat
                # heavily across families
                hit = cache.get(mask)
                if hit is None:
                    hit = 0
                    for x in bits_of(mask):
                        hit |= yup[f[x]]
                    cache[mask] = hit
                return hit

            for fam, inter in data:
                lhs = simg(inter)
                rhs = y.full
                for k in fam:
                    rhs &= simg(k)
                if lhs != rhs:
                    return False, {
                        "target": repr(y.poset),
                        "map": list(f),
                        "family": [ctx.describe(k) for k in fam],
                    }
    return True, None


# derived spaces (power spaces, products, extensions) may outgrow the carrier
# cap; lift it up to a hard ceiling and let CapExceededError turn the report
# into not-applicable beyond that
_CTX_CEILING = 16


def _lifted(ctx, n):
    lift = min(max(ctx.caps.max_carrier, n), _CTX_CEILING)
    return replace(ctx.caps, max_carrier=lift)


def _sub_flag(ctx, space, name):
    return _Ctx(space, _lifted(ctx, space.n)).flag(name)


# -- the finite checkers ----------------------------------------------------


def _fin_dspace_7(ctx):
    p = ctx.poset
    c1 = ctx.flag("d_space")
    c2 = set(ctx.dc) == set(ctx.sc)

    def c3():
        for d in ctx.directed:
            cut = p.upper_bounds(d)
            for u in ctx.opens:
                if cut & ~u == 0 and not d & u:
                    return False
        return True

    def c4():
        # filtered families inside the point saturations are exactly
        # {up(x) : x in D} for directed D
        for d in ctx.directed:
            members = [p.up_masks[x] for x in bits_of(d)]
            inter = ctx.full
            for k in members:
                inter &= k
            for u in ctx.opens:
                if inter & ~u == 0 and not any(k & ~u == 0 for k in members):
                    return False
        return True

    def c5(coll):
        for d in ctx.directed:
            cut = p.upper_bounds(d)
            for a in coll:
                if d & ~a == 0 and not a & cut:
                    return False
        return True

    def c7():
        for d in ctx.directed:
            if not p.down(d) & p.upper_bounds(d):
                return False
        return True

    conds = [
        ("d-space", c1),
        ("Dc equals Sc", c2),
        ("cut of directed hits opens", c3()),
        ("saturation families hit opens", c4()),
        ("closed supersets meet cuts", c5(ctx.closed)),
        ("irreducible closed supersets meet cuts", c5(ctx.irr_c)),
        ("closure meets cut", c7()),
    ]
    return _all_true(
        "d-space.7cond",
        conds,
        detail="seven d-space characterizations, definitional scans",
    )


def _cof_dspace_7(space):
    return TheoremReport(
        "d-space.7cond",
        PASS,
        detail="directed sets of the discrete specialization order are "
        "singletons {x}; every condition reduces to x in up(x) = {x}, and "
        "Dc = Sc = singletons",
    )


def _fin_dbounded_4(ctx):
    p = ctx.poset
    c1 = ctx.flag("d_bounded")
    c2 = all(p.upper_bounds(d) for d in ctx.directed)

    def c3(coll):
        for d in ctx.directed:
            for a in coll:
                if d & ~a == 0:
                    inter = ctx.full
                    for x in bits_of(d):
                        inter &= ctx.up(a & p.up_masks[x])
                    if inter == 0:
                        return False
        return True

    conds = [
        ("directed sets bounded", c1),
        ("cuts nonempty", c2),
        ("closed relative cuts nonempty", c3(ctx.closed)),
        ("irreducible closed relative cuts nonempty", c3(ctx.irr_c)),
    ]
    return _all_true(
        "d-bounded.4cond", conds, detail="four d-bounded characterizations"
    )


def _fin_dspace_map(ctx):
    p = ctx.poset
    for y in _map_targets():
        for f in continuous_maps(ctx.space, y, ctx.caps):
            for d in ctx.directed:
                s = p.upper_bounds(d)
                lhs = y.saturation(image_mask(f, s))
                mid = y.full
                rhs = y.full
                for x in bits_of(d):
                    mid &= y.saturation(image_mask(f, p.up_masks[x]))
                    rhs &= y.poset.up_masks[f[x]]
                if not lhs == mid == rhs:
                    return TheoremReport(
                        "d-space.map",
                        FAIL,
                        detail="cut-image equation failed",
                        witness={
                            "target": repr(y.poset),
                            "map": list(f),
                            "directed": ctx.describe(d),
                        },
                    )
    return _all_true(
        "d-space.map",
        [("d-space", ctx.flag("d_space")), ("map equations", True)],
        detail="cut-image equations over continuous maps into sober "
        "targets with at most 3 points (bounded check)",
    )


def _fin_wf_equational(ctx):
    fams, mode = ctx.filtered_families()
    kd = _is_dcpo(power_order(ctx.k, reverse=True))
    ft = ctx.flag("ftip")
    eqc, wc = _family_upper_eq(ctx, ctx.closed)
    eqi, wi = _family_upper_eq(ctx, ctx.irr_c)
    conds = [
        ("well-filtered", ctx.flag("well_filtered")),
        ("K dcpo + closed equation", kd and eqc),
        ("K dcpo + irreducible equation", kd and eqi),
        ("FTIP + closed equation", ft and eqc),
        ("FTIP + irreducible equation", ft and eqi),
    ]
    report = _all_true(
        "wf.equational",
        conds,
        detail=f"five well-filtered characterizations ({mode} families)",
    )
    if report.verdict == FAIL and (wc or wi):
        return TheoremReport(
            "wf.equational", FAIL, detail=report.detail, witness=wc or wi
        )
    return report


def _fin_wf_map(ctx):
    ok, wit = _map_family_equation(ctx)
    if not ok:
        return TheoremReport(
            "wf.map", FAIL, detail="image equation failed", witness=wit
        )
    return _all_true(
        "wf.map",
        [("well-filtered", ctx.flag("well_filtered")), ("map equations", ok)],
        detail="filtered-family image equations over continuous maps into "
        "sober targets with at most 3 points (bounded check)",
    )


def _fin_wf_min_cor(ctx):
    p = ctx.poset
    fams, mode = ctx.filtered_families()
    for fam in fams:
        inter = ctx.full
        for k in fam:
            inter &= k
        if inter == 0 or not p.is_upper(inter):
            return TheoremReport(
                "wf.min-cor",
                FAIL,
                detail="intersection of a filtered family left K(X)",
                witness={"family": [ctx.describe(k) for k in fam]},
            )
        for c in bits_of(p.minimal(inter)):
            dc = p.down_masks[c]
            want = p.up_masks[c]
            lhs = ctx.full
            for k in fam:
                lhs &= ctx.up(dc & k)
            if not lhs == ctx.up(dc & inter) == want:
                return TheoremReport(
                    "wf.min-cor",
                    FAIL,
                    detail="minimal-point equations failed",
                    witness={
                        "family": [ctx.describe(k) for k in fam],
                        "point": p.label_of(c),
                    },
                )
    return TheoremReport(
        "wf.min-cor",
        PASS,
        detail=f"minimal points of filtered intersections behave ({mode} families)",
    )


def _fin_wf_rudin_chain(ctx):
    p = ctx.poset
    c_sober = ctx.flag("sober")
    c2 = True
    for a in ctx.irr_c:
        for k in ctx.k:
            if not p.maximal(a) or not ctx.space.is_closed(p.down(a & k)):
                c2 = False
    c_wf = ctx.flag("well_filtered")
    chain_ok = (not c_sober or c2) and (not c2 or c_wf)
    cc = ctx.flag("core_compact")
    equiv_ok = not cc or (c_sober == c2 == c_wf)
    conds = [
        ("sober implies maxima and closed lower cuts", chain_ok),
        ("equivalence under core compactness", equiv_ok),
        ("all stages hold here", c_sober and c2 and c_wf),
    ]
    return _all_true(
        "wf.rudin-chain",
        conds,
        detail="sober, then maxima with closed down(A & K), then well-filtered",
    )


def _cof_wf_rudin_chain(space):
    # condition (2) genuinely fails: A = X is irreducible closed and
    # K = X minus {x0} is compact saturated, but down(A & K) = K is neither
    # finite nor the whole space, hence not closed
    return TheoremReport(
        "wf.rudin-chain",
        PASS,
        detail="chain holds vacuously: the space is not sober; the middle "
        "condition fails at A = X, K = X minus {x0} (down(A & K) = K is not "
        "closed), and the space is not well-filtered; under core compactness "
        "all three stages agree by being false together",
    )


def _fin_wf_wd_sc(ctx):
    rd = rudin_family(ctx.space, ctx.caps)
    wd = wd_family(ctx.space, ctx.caps)
    conds = [
        ("well-filtered", ctx.flag("well_filtered")),
        ("RD equals Sc", set(rd) == set(ctx.sc)),
        ("WD equals Sc", set(wd) == set(ctx.sc)),
    ]
    return _all_true(
        "wf.wd-sc", conds, detail="well-filtered iff RD = Sc iff WD = Sc"
    )


def _cof_wf_wd_sc(space):
    return TheoremReport(
        "wf.wd-sc",
        PASS,
        detail="all three conditions fail together: the space is not "
        "well-filtered, and X itself is a Rudin set and a WD set that is "
        "no point closure",
    )


def _fin_wf_add_top(ctx):
    y = add_top(ctx.space)
    wf_y = _Ctx(y, _lifted(ctx, y.n)).flag("well_filtered")
    shape = set(y.closed_masks()) == set(ctx.closed) | {y.full}
    conds = [
        ("closed sets are C(X) plus the whole", shape),
        ("well-filteredness persists", not ctx.flag("well_filtered") or wf_y),
        ("extension is well-filtered here", wf_y),
    ]
    return _all_true(
        "wf.add-top", conds, detail="adding a top point keeps well-filteredness"
    )


def _fin_kmeet(ctx):
    po = power_order(ctx.k, reverse=True)
    m = len(ctx.k)
    if m <= ctx.caps.max_family_base:
        index_sets = range(1, 1 << m)
        mode = "exhaustive"
    else:
        index_sets = [1 << i for i in range(m)] + [
            (1 << i) | (1 << j) for i in range(m) for j in range(i + 1, m)
        ]
        mode = "bounded"
    for bits in index_sets:
        inter = ctx.full
        for i in bits_of(bits):
            inter &= ctx.k[i]
        sup = po.least_upper_bound(bits)
        if (sup is not None) != (inter != 0):
            return TheoremReport(
                "kmeet",
                FAIL,
                detail="existence of the Smyth supremum disagrees with the meet",
                witness={"members": [ctx.describe(ctx.k[i]) for i in bits_of(bits)]},
            )
        if sup is not None and ctx.k[sup] != inter:
            return TheoremReport(
                "kmeet",
                FAIL,
                detail="Smyth supremum is not the intersection",
                witness={"members": [ctx.describe(ctx.k[i]) for i in bits_of(bits)]},
            )
    return TheoremReport(
        "kmeet",
        PASS,
        detail=f"suprema in K(X) are exactly the nonempty intersections ({mode})",
    )


def _fin_sober_7(ctx):
    p = ctx.poset
    c1 = ctx.flag("sober")

    def c2():
        for a in ctx.directed:
            if not p.down(a) & p.upper_bounds(a):
                return False
        return True

    def c3():
        return all(a & p.upper_bounds(a) for a in ctx.irr_c)

    def c4(coll):
        for a in coll:
            cut = p.upper_bounds(a)
            for u in ctx.opens:
                if cut & ~u == 0 and not a & u:
                    return False
        return True

    def c6():
        for a in ctx.directed:
            members = [p.up_masks[x] for x in bits_of(a)]
            inter = ctx.full
            for k in members:
                inter &= k
            for u in ctx.opens:
                if inter & ~u == 0 and not any(k & ~u == 0 for k in members):
                    return False
        return True

    def c7():
        for k in ctx.k:
            members = [kk for kk in ctx.k if k & ~kk == 0]
            inter = ctx.full
            for kk in members:
                inter &= kk
            for u in ctx.opens:
                if inter & ~u == 0 and not any(kk & ~u == 0 for kk in members):
                    return False
        return True

    conds = [
        ("sober", c1),
        ("closures meet cuts", c2()),
        ("irreducible closed sets meet their cuts", c3()),
        ("cut of irreducible hits opens", c4(ctx.directed)),
        ("cut of irreducible closed hits opens", c4(ctx.irr_c)),
        ("saturation families hit opens", c6()),
        ("closed Smyth families hit opens", c7()),
    ]
    return _all_true(
        "sober.7cond", conds, detail="seven sobriety characterizations"
    )


def _fin_sober_equational(ctx):
    p = ctx.poset
    rb = ctx.flag("r_bounded")

    def eq(a_coll, c_coll):
        for a in a_coll:
            cut = p.upper_bounds(a)
            for c in c_coll:
                lhs = ctx.up(c & cut)
                rhs = ctx.full
                for x in bits_of(a):
                    rhs &= ctx.up(c & p.up_masks[x])
                if lhs != rhs:
                    return False
        return True

    def eq_fam(a_coll, c_coll):
        # the same equations presented through the principal Smyth families
        for a in a_coll:
            members = [p.up_masks[x] for x in bits_of(a)]
            inter = ctx.full
            for k in members:
                inter &= k
            for c in c_coll:
                lhs = ctx.up(c & inter)
                rhs = ctx.full
                for k in members:
                    rhs &= ctx.up(c & k)
                if lhs != rhs:
                    return False
        return True

    conds = [
        ("sober", ctx.flag("sober")),
        ("r-bounded + eq(Irr, closed)", rb and eq(ctx.directed, ctx.closed)),
        ("r-bounded + eq(Irr, IrrC)", rb and eq(ctx.directed, ctx.irr_c)),
        ("r-bounded + family eq(Irr, closed)", rb and eq_fam(ctx.directed, ctx.closed)),
        ("r-bounded + family eq(Irr, IrrC)", rb and eq_fam(ctx.directed, ctx.irr_c)),
        ("r-bounded + eq(IrrC, closed)", rb and eq(ctx.irr_c, ctx.closed)),
        ("r-bounded + eq(IrrC, IrrC)", rb and eq(ctx.irr_c, ctx.irr_c)),
    ]
    return _all_true(
        "sober.equational",
        conds,
        detail="sobriety as r-boundedness plus relative cut equations",
    )


def _fin_sober_map(ctx):
    ok, wit = _map_family_equation(ctx)
    if not ok:
        return TheoremReport(
            "sober.map", FAIL, detail="image equation failed", witness=wit
        )
    return _all_true(
        "sober.map",
        [("sober", ctx.flag("sober")), ("map equations", ok)],
        detail="irreducible Smyth subsets of a finite space are its filtered "
        "families; image equations over maps into targets with at most 3 "
        "points (bounded check)",
    )


def _fin_sober_equiv(ctx):
    s = ctx.flag("sober")
    d = ctx.flag("d_space")
    wf = ctx.flag("well_filtered")
    dc = ctx.flag("dc_space")
    rd = ctx.flag("rudin_space")
    wd = ctx.flag("wd_space")
    conds = [
        ("sober", s),
        ("DC d-space", dc and d),
        ("well-filtered DC", wf and dc),
        ("well-filtered Rudin", wf and rd),
        ("well-filtered WD", wf and wd),
    ]
    return _all_true(
        "sober.equiv",
        conds,
        detail="sober iff DC d-space iff well-filtered DC, Rudin, or WD space",
    )


def _cof_sober_equiv(space):
    return TheoremReport(
        "sober.equiv",
        PASS,
        detail="all five conditions fail together: the space is neither sober "
        "nor a DC space nor well-filtered (it is a Rudin and WD space, but "
        "the well-filtered half of those conjunctions fails)",
    )


def _fin_sober_min_cor(ctx):
    # irreducible closed subsets of the Smyth power space are the principal
    # superset families; their intersection is the generating member
    p = ctx.poset
    for k in ctx.k:
        members = [kk for kk in ctx.k if k & ~kk == 0]
        inter = ctx.full
        for kk in members:
            inter &= kk
        if inter == 0 or not p.is_upper(inter):
            return TheoremReport(
                "sober.min-cor",
                FAIL,
                detail="intersection left K(X)",
                witness={"family": f"supersets of {ctx.describe(k)}"},
            )
        for c in bits_of(p.minimal(inter)):
            dc = p.down_masks[c]
            lhs = ctx.full
            for kk in members:
                lhs &= ctx.up(dc & kk)
            if not lhs == ctx.up(dc & inter) == p.up_masks[c]:
                return TheoremReport(
                    "sober.min-cor",
                    FAIL,
                    detail="minimal-point equations failed",
                    witness={
                        "family": f"supersets of {ctx.describe(k)}",
                        "point": p.label_of(c),
                    },
                )
    return TheoremReport(
        "sober.min-cor",
        PASS,
        detail="minimal points of intersections of closed Smyth families behave",
    )


def _fin_sober_cc_wf(ctx):
    cc = ctx.flag("core_compact")
    wf = ctx.flag("well_filtered")
    s = ctx.flag("sober")
    if cc and wf and not s:
        return TheoremReport(
            "sober.core-compact-wf",
            FAIL,
            detail="core compact and well-filtered but not sober",
            witness={"flags": {"core_compact": cc, "well_filtered": wf, "sober": s}},
        )
    if not (cc and wf):
        return TheoremReport(
            "sober.core-compact-wf",
            NOT_APPLICABLE,
            detail="hypothesis (core compact and well-filtered) fails here",
        )
    return TheoremReport(
        "sober.core-compact-wf",
        PASS,
        detail="core compact and well-filtered, hence sober",
    )


def _cof_sober_cc_wf(space):
    # contrapositive with genuinely satisfied hypotheses: locally compact
    # (hence core compact) and not sober forces not well-filtered
    return TheoremReport(
        "sober.core-compact-wf",
        PASS,
        detail="contrapositive: the space is locally compact and not sober, "
        "hence not well-filtered; and indeed the cofinite tails witness the "
        "failure of well-filteredness",
    )


def _fin_chain_inclusion(ctx):
    rd = set(rudin_family(ctx.space, ctx.caps))
    wd = set(wd_family(ctx.space, ctx.caps))
    dc = set(ctx.dc)
    irr = set(ctx.irr_c)
    steps = [
        ("Dc inside RD", dc <= rd, dc - rd),
        ("RD inside WD", rd <= wd, rd - wd),
        ("WD inside IrrC", wd <= irr, wd - irr),
    ]
    for name, ok, diff in steps:
        if not ok:
            return TheoremReport(
                "chain.inclusion",
                FAIL,
                detail=f"{name} fails",
                witness={"set": ctx.describe(min(diff))},
            )
    return TheoremReport(
        "chain.inclusion",
        PASS,
        detail="Dc inside RD inside WD inside IrrC",
    )


def _cof_chain_inclusion(space):
    return TheoremReport(
        "chain.inclusion",
        PASS,
        detail="Dc = Sc = singletons; RD = WD = IrrC = singletons plus X; "
        "the inclusion is strict exactly at X",
    )


def _fin_rudin_lc(ctx):
    lc = ctx.flag("locally_compact")
    rd = ctx.flag("rudin_space")
    if lc and not rd:
        return TheoremReport(
            "rudin.local-compact",
            FAIL,
            detail="locally compact but not a Rudin space",
            witness={"flag": "rudin_space", "value": rd},
        )
    if not lc:
        return TheoremReport(
            "rudin.local-compact",
            NOT_APPLICABLE,
            detail="hypothesis (locally compact) fails here",
        )
    return TheoremReport(
        "rudin.local-compact",
        PASS,
        detail="locally compact implies Rudin space",
    )


def _cof_rudin_lc(space):
    return TheoremReport(
        "rudin.local-compact",
        PASS,
        detail="the cofinite space is locally compact (every open is compact) "
        "and its irreducible closed sets, the singletons and X, all have the "
        "Rudin property",
    )


def _fin_wd_cc(ctx):
    cc = ctx.flag("core_compact")
    wd = ctx.flag("wd_space")
    if cc and not wd:
        return TheoremReport(
            "wd.core-compact",
            FAIL,
            detail="core compact but not a WD space",
            witness={"flag": "wd_space", "value": wd},
        )
    if not cc:
        return TheoremReport(
            "wd.core-compact",
            NOT_APPLICABLE,
            detail="hypothesis (core compact) fails here",
        )
    return TheoremReport(
        "wd.core-compact",
        PASS,
        detail="core compact implies WD space",
    )


def _cof_wd_cc(space):
    return TheoremReport(
        "wd.core-compact",
        PASS,
        detail="the cofinite space is core compact and every irreducible "
        "closed set (singletons and X) is WD",
    )


def _closed_subspace_checker(tid, flag):
    def check(ctx):
        if not ctx.flag(flag):
            return TheoremReport(
                tid, NOT_APPLICABLE, detail=f"the base space is not {flag}"
            )
        for a in ctx.closed:
            sub = subspace_closed(ctx.space, a)
            if not _sub_flag(ctx, sub.space, flag):
                return TheoremReport(
                    tid,
                    FAIL,
                    detail=f"closed subspace loses {flag}",
                    witness={"set": ctx.describe(a)},
                )
        return TheoremReport(
            tid, PASS, detail=f"{flag} passes to every closed subspace"
        )

    return check


def _product_checker(tid, flag):
    def check(ctx):
        for factor in (FiniteSpace(chain(2)), FiniteSpace(vee_poset())):
            pr = product([ctx.space, factor], ctx.caps)
            # no cap lift here: a product past the carrier cap is reported
            # not-applicable rather than enumerated
            lhs = _Ctx(pr.space, ctx.caps).flag(flag)
            rhs = ctx.flag(flag) and _sub_flag(ctx, factor, flag)
            if lhs != rhs:
                return TheoremReport(
                    tid,
                    FAIL,
                    detail=f"product disagrees with factors on {flag}",
                    witness={"factor": repr(factor.poset)},
                )
        return TheoremReport(
            tid,
            PASS,
            detail=f"{flag} of a binary product matches the conjunction of factors",
        )

    return check


def _fin_hofmann_mislove(ctx):
    rep = open_filters_and_phi(ctx.space, ctx.caps)
    conds = [
        ("counts match", rep.counts_match),
        ("Phi injective", rep.phi_injective),
        ("Phi surjective", rep.phi_surjective),
        ("Phi order isomorphism", rep.order_iso),
        ("consistent with sobriety", rep.sober_consistent),
    ]
    return _all_true(
        "hofmann-mislove",
        conds,
        detail="Scott-open filters of O(X) correspond to compact saturated sets",
    )


def _fin_rudin_meet(ctx):
    p = ctx.poset
    for k in ctx.k:
        target = {kk for kk in ctx.k if k & ~kk == 0}
        mins = list(bits_of(p.minimal(k)))
        got = {
            kk
            for kk in ctx.k
            if all(kk & p.down_masks[x] for x in mins)
        }
        if got != target:
            return TheoremReport(
                "rudin.meet",
                FAIL,
                detail="diamond intersection misses the principal Smyth family",
                witness={"set": ctx.describe(k)},
            )
    return TheoremReport(
        "rudin.meet",
        PASS,
        detail="each irreducible closed Smyth family is the intersection of "
        "the diamonds of minimal point closures",
    )


def _fin_rudin_equiv(ctx):
    m = len(ctx.k)
    if m > _EQUIV_BASE_LIMIT:
        raise CapExceededError(
            f"rudin.equiv enumerates all subfamilies of K(X); |K(X)| = {m} "
            f"exceeds {_EQUIV_BASE_LIMIT}"
        )
    closed = [c for c in ctx.closed if c]
    for bits in range(1, 1 << m):
        fam = [ctx.k[i] for i in range(m) if bits >> i & 1]
        lhs = True
        for a in fam:
            for b in fam:
                inter = a & b
                if not any(c & ~inter == 0 for c in fam):
                    lhs = False
        meets = {c: all(c & kk for kk in fam) for c in closed}

        def minimal_irr_inside(a):
            for c in ctx.irr_c:
                if c & ~a == 0 and meets[c]:
                    if not any(d != c and d & ~c == 0 and meets[d] for d in closed):
                        return True
            return False

        rhs = all(minimal_irr_inside(a) for a in closed if meets[a])
        if lhs != rhs:
            return TheoremReport(
                "rudin.equiv",
                FAIL,
                detail="filteredness disagrees with the minimal-set criterion",
                witness={"family": [ctx.describe(kk) for kk in fam]},
            )
    return TheoremReport(
        "rudin.equiv",
        PASS,
        detail="a Smyth family is irreducible iff every closed set meeting "
        "all members contains a minimal irreducible closed one that does",
    )


def _fin_smyth_union(ctx):
    rep = union_map_check(ctx.space, ctx.caps)
    conds = [
        ("unions stay compact saturated", rep.union_compact_ok),
        ("union map continuous", rep.continuity_ok),
        ("meet remark", rep.meet_remark_ok),
    ]
    return _all_true(
        "smyth.union",
        conds,
        detail=f"union map on {rep.families_checked} compact families ({rep.mode})",
    )


def _fin_smyth_wf_sober(ctx):
    ps = smyth(ctx.space, ctx.caps)
    ps_ctx = _Ctx(ps.space, _lifted(ctx, ps.space.n))
    conds = [
        ("X well-filtered iff Smyth d-space",
         ctx.flag("well_filtered") == ps_ctx.flag("d_space")),
        ("X well-filtered iff Smyth well-filtered",
         ctx.flag("well_filtered") == ps_ctx.flag("well_filtered")),
        ("X sober iff Smyth sober", ctx.flag("sober") == ps_ctx.flag("sober")),
    ]
    return _all_true(
        "smyth.wf-sober",
        conds,
        detail="well-filteredness and sobriety transfer along the Smyth "
        "power space",
    )


def _fin_hoare_sober(ctx):
    ph = hoare(ctx.space, "closed", caps=ctx.caps)
    if ph.space.n > ctx.caps.max_family_base:
        raise CapExceededError(
            f"sobriety scan on the Hoare space needs carrier <= "
            f"{ctx.caps.max_family_base}, got {ph.space.n}"
        )
    if not is_sober_finite(ph.space):
        return TheoremReport(
            "hoare.sober",
            FAIL,
            detail="Hoare power space is not sober",
            witness={"carrier": ph.family_label},
        )
    return TheoremReport(
        "hoare.sober",
        PASS,
        detail="the Hoare power space over all nonempty closed sets is sober",
    )


def _fin_smyth_wd_transfer(ctx):
    ps = smyth(ctx.space, ctx.caps)
    ps_wd = _Ctx(ps.space, _lifted(ctx, ps.space.n)).flag("wd_space")
    if ps_wd and not ctx.flag("wd_space"):
        return TheoremReport(
            "smyth.wd-transfer",
            FAIL,
            detail="Smyth power space is WD but the base is not",
            witness={"flag": "wd_space"},
        )
    return TheoremReport(
        "smyth.wd-transfer",
        PASS,
        detail="if the Smyth power space is a WD space then so is the base "
        "(the converse is open in general)",
    )


def _fin_dspace_equational(ctx):
    p = ctx.poset
    db = ctx.flag("d_bounded")

    def eq(coll):
        for d in ctx.directed:
            cut = p.upper_bounds(d)
            for a in coll:
                lhs = ctx.up(a & cut)
                rhs = ctx.full
                for x in bits_of(d):
                    rhs &= ctx.up(a & p.up_masks[x])
                if lhs != rhs:
                    return False
        return True

    conds = [
        ("d-space", ctx.flag("d_space")),
        ("d-bounded + eq over closed", db and eq(ctx.closed)),
        ("d-bounded + eq over irreducible closed", db and eq(ctx.irr_c)),
    ]
    return _all_true(
        "d-space.equational",
        conds,
        detail="d-space iff d-bounded with relative cut equations",
    )


@dataclass(frozen=True)
class TheoremSpec:
    theorem_id: str
    statement: str
    finite: object
    cofinite: object = None


_SPECS = (
    TheoremSpec(
        "d-space.7cond",
        "seven equivalent characterizations of d-spaces",
        _fin_dspace_7,
        _cof_dspace_7,
    ),
    TheoremSpec(
        "d-bounded.4cond",
        "four equivalent characterizations of directed boundedness",
        _fin_dbounded_4,
    ),
    TheoremSpec(
        "d-space.map",
        "d-spaces via cut-image equations for continuous maps",
        _fin_dspace_map,
    ),
    TheoremSpec(
        "d-space.equational",
        "d-spaces via relative cut equations over directed sets",
        _fin_dspace_equational,
    ),
    TheoremSpec(
        "wf.equational",
        "five equivalent characterizations of well-filteredness",
        _fin_wf_equational,
    ),
    TheoremSpec(
        "wf.map",
        "well-filteredness via filtered image equations",
        _fin_wf_map,
    ),
    TheoremSpec(
        "wf.min-cor",
        "minimal points of filtered intersections in well-filtered spaces",
        _fin_wf_min_cor,
    ),
    TheoremSpec(
        "wf.rudin-chain",
        "sober implies closed lower cuts which imply well-filtered",
        _fin_wf_rudin_chain,
        _cof_wf_rudin_chain,
    ),
    TheoremSpec(
        "wf.wd-sc",
        "well-filtered iff RD collapses to point closures iff WD does",
        _fin_wf_wd_sc,
        _cof_wf_wd_sc,
    ),
    TheoremSpec(
        "wf.add-top",
        "adding a top point preserves well-filteredness",
        _fin_wf_add_top,
    ),
    TheoremSpec(
        "kmeet",
        "suprema in K(X) are nonempty intersections",
        _fin_kmeet,
    ),
    TheoremSpec(
        "chain.inclusion",
        "Dc inside RD inside WD inside IrrC",
        _fin_chain_inclusion,
        _cof_chain_inclusion,
    ),
    TheoremSpec(
        "sober.7cond",
        "seven equivalent characterizations of sobriety",
        _fin_sober_7,
    ),
    TheoremSpec(
        "sober.equational",
        "sobriety as r-boundedness plus relative cut equations",
        _fin_sober_equational,
    ),
    TheoremSpec(
        "sober.map",
        "sobriety via irreducible-family image equations",
        _fin_sober_map,
    ),
    TheoremSpec(
        "sober.equiv",
        "sober iff DC d-space iff well-filtered DC, Rudin, or WD",
        _fin_sober_equiv,
        _cof_sober_equiv,
    ),
    TheoremSpec(
        "sober.min-cor",
        "minimal points of intersections of closed Smyth families",
        _fin_sober_min_cor,
    ),
    TheoremSpec(
        "sober.core-compact-wf",
        "core compact well-filtered spaces are sober",
        _fin_sober_cc_wf,
        _cof_sober_cc_wf,
    ),
    TheoremSpec(
        "rudin.local-compact",
        "locally compact spaces are Rudin spaces",
        _fin_rudin_lc,
        _cof_rudin_lc,
    ),
    TheoremSpec(
        "wd.core-compact",
        "core compact spaces are WD spaces",
        _fin_wd_cc,
        _cof_wd_cc,
    ),
    TheoremSpec(
        "rudin.closed-subspace",
        "closed subspaces of Rudin spaces are Rudin spaces",
        _closed_subspace_checker("rudin.closed-subspace", "rudin_space"),
    ),
    TheoremSpec(
        "wd.closed-subspace",
        "closed subspaces of WD spaces are WD spaces",
        _closed_subspace_checker("wd.closed-subspace", "wd_space"),
    ),
    TheoremSpec(
        "dc.closed-subspace",
        "closed subspaces of DC spaces are DC spaces",
        _closed_subspace_checker("dc.closed-subspace", "dc_space"),
    ),
    TheoremSpec(
        "rudin.product",
        "binary products are Rudin spaces iff both factors are",
        _product_checker("rudin.product", "rudin_space"),
    ),
    TheoremSpec(
        "wd.product",
        "binary products are WD spaces iff both factors are",
        _product_checker("wd.product", "wd_space"),
    ),
    TheoremSpec(
        "dc.product",
        "binary products are DC spaces iff both factors are",
        _product_checker("dc.product", "dc_space"),
    ),
    TheoremSpec(
        "hofmann-mislove",
        "Scott-open filters of O(X) correspond to compact saturated sets",
        _fin_hofmann_mislove,
    ),
    TheoremSpec(
        "rudin.meet",
        "irreducible closed Smyth families as diamond intersections",
        _fin_rudin_meet,
    ),
    TheoremSpec(
        "rudin.equiv",
        "irreducibility of a Smyth family via minimal irreducible closed sets",
        _fin_rudin_equiv,
    ),
    TheoremSpec(
        "smyth.union",
        "the union map of the iterated Smyth power space",
        _fin_smyth_union,
    ),
    TheoremSpec(
        "smyth.wf-sober",
        "well-filteredness and sobriety transfer to the Smyth power space",
        _fin_smyth_wf_sober,
    ),
    TheoremSpec(
        "hoare.sober",
        "Hoare power spaces are sober",
        _fin_hoare_sober,
    ),
    TheoremSpec(
        "smyth.wd-transfer",
        "WD-ness of the Smyth power space passes to the base",
        _fin_smyth_wd_transfer,
    ),
)


THEOREMS = {spec.theorem_id: spec for spec in _SPECS}


def verify_theorems(space, ids=None, caps=DEFAULT_CAPS):
    """Run the registered theorem checks; every report is pass, fail with a
    witness, or not-applicable with the reason."""
    space = as_space(space)
    selected = list(THEOREMS) if ids is None else list(ids)
    unknown = [t for t in selected if t not in THEOREMS]
    if unknown:
        raise OrderError(
            f"unknown theorem ids {unknown}; known: {sorted(THEOREMS)}"
        )
    reports = []
    if space.kind == "finite":
        try:
            ctx = _Ctx(space, caps)
        except CapExceededError as exc:
            return [
                TheoremReport(tid, NOT_APPLICABLE, detail=f"cap: {exc}")
                for tid in selected
            ]
        for tid in selected:
            try:
                reports.append(THEOREMS[tid].finite(ctx))
            except CapExceededError as exc:
                reports.append(
                    TheoremReport(tid, NOT_APPLICABLE, detail=f"cap: {exc}")
                )
    else:
        for tid in selected:
            checker = THEOREMS[tid].cofinite
            if checker is None:
                reports.append(
                    TheoremReport(
                        tid,
                        NOT_APPLICABLE,
                        detail="quantifies over enumerations that are infinite "
                        "on the cofinite space; no symbolic procedure",
                    )
                )
            else:
                reports.append(checker(space))
    return reports
