"""Sobrification, the well-filtered reflection, and the universal property.

Both reflections of a finite space are Hoare-style power spaces: the
sobrification sits on the irreducible closed sets, the well-filtered
reflection on the WD sets.  Finite spaces are already sober, so either
reflection is homeomorphic to the original; the value of building them
anyway is that eta, the factorization of maps through eta, the functor
action, and the finite-product homeomorphism can all be exhibited and
re-checked element by element.

The cofinite space is the one supported instance whose reflection is a
proper extension.  Its reflected space is neither finite nor cofinite, so
it is returned as a symbolic description record rather than a space.
"""

from dataclasses import dataclass

from .classify import classify
from .errors import OrderError, UnsupportedOperationError
from .poset import bits_of
from .powerspace import eta_map, hoare
from .rudin import wd_family, wd_status, WD_YES
from .space import (
    DEFAULT_CAPS,
    FinOrCofinSet,
    as_space,
    continuous_maps,
    image_mask,
    is_irreducible,
    is_sober_finite,
    product,
)


def homeomorphic(x, y):
    """Search for a homeomorphism between two finite spaces.

    Finite T0 spaces are Alexandroff, so a homeomorphism is the same thing
    as an order isomorphism of the specialization posets; the tests compare
    this search against a raw topology-preserving bijection search on small
    instances.  Returns (True, point map) or (False, None).
    """
    x, y = as_space(x), as_space(y)
    if x.kind != "finite" or y.kind != "finite":
        raise OrderError("homeomorphism search needs finite spaces")
    px, py = x.poset, y.poset
    n = px.n
    if n != py.n:
        return False, None

    def profile(p, i):
        return (
            bin(p.down_masks[i]).count("1"),
            bin(p.up_masks[i]).count("1"),
        )

    xprof = [profile(px, i) for i in range(n)]
    yprof = [profile(py, i) for i in range(n)]
    if sorted(xprof) != sorted(yprof):
        return False, None

    perm = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for j in range(n):
            if used[j] or xprof[i] != yprof[j]:
                continue
            ok = all(
                px.le(k, i) == py.le(perm[k], j)
                and px.le(i, k) == py.le(j, perm[k])
                for k in range(i)
            )
            if not ok:
                continue
            perm[i] = j
            used[j] = True
            if extend(i + 1):
                return True
            perm[i] = -1
            used[j] = False
        return False

    if extend(0):
        return True, tuple(perm)
    return False, None


@dataclass(frozen=True)
class Reflection:
    """A reflection of a finite space, materialized as a Hoare power space."""

    kind: str  # "sobrification" or "well-filtered"
    original: object
    reflected: object  # PowerSpace
    eta: tuple  # x -> carrier index of cl{x}
    reflected_sober: bool
    reflected_well_filtered: bool
    iso: tuple  # homeomorphism original -> reflected, None if absent

    @property
    def homeo_to_original(self):
        return self.iso is not None


def _build_reflection(space, kind, ph, caps):
    eta = eta_map(space, ph, caps)  # raises unless a topological embedding
    sober = is_sober_finite(ph.space)
    wf = classify(ph.space, caps).vector.well_filtered
    if not wf:
        raise OrderError(f"the {kind} reflection came out non-well-filtered")
    if kind == "sobrification" and not sober:
        raise OrderError("the sobrification came out non-sober")
    _, iso = homeomorphic(space, ph.space)
    return Reflection(
        kind=kind,
        original=space,
        reflected=ph,
        eta=eta,
        reflected_sober=sober,
        reflected_well_filtered=wf,
        iso=iso,
    )


def sobrification(space, caps=DEFAULT_CAPS):
    """The Hoare-style space on the irreducible closed sets, with eta."""
    space = as_space(space)
    if space.kind != "finite":
        raise UnsupportedOperationError(
            "the sobrification is materialized for finite spaces; for the "
            "cofinite space see wf_reflection, whose description coincides"
        )
    ph = hoare(space, "irr", caps=caps)
    return _build_reflection(space, "sobrification", ph, caps)


@dataclass(frozen=True)
class CofiniteReflection:
    """Symbolic description of the cofinite space's well-filtered reflection.

    The reflected space is neither finite nor cofinite, so its carrier is
    described rather than enumerated: all singleton closures plus the one
    class of X itself.
    """

    kind: str
    carrier_description: str
    added_points: int
    new_point_is_top: bool
    reflected_sober: bool
    reflected_well_filtered: bool
    matches_sobrification: bool
    compact_both: bool


def _cofinite_wd_pieces(space):
    pieces = set()
    if wd_status(space, FinOrCofinSet.points("x0")).status == WD_YES:
        pieces.add("singletons")
    if wd_status(space, FinOrCofinSet.whole()).status == WD_YES:
        pieces.add("X")
    # finite sets with more than one point are not irreducible, hence out
    if wd_status(space, FinOrCofinSet.points("x0", "x1")).status == WD_YES:
        pieces.add("larger finite sets")
    return frozenset(pieces)


def _cofinite_irr_pieces(space):
    pieces = set()
    if is_irreducible(space, FinOrCofinSet.points("x0")):
        pieces.add("singletons")
    if is_irreducible(space, FinOrCofinSet.whole()):
        pieces.add("X")
    if is_irreducible(space, FinOrCofinSet.points("x0", "x1")):
        pieces.add("larger finite sets")
    return frozenset(pieces)


def wf_reflection(space, caps=DEFAULT_CAPS):
    """The well-filtered reflection, the Hoare-style space on WD(X).

    Finite spaces are well-filtered already, so the reflection is
    homeomorphic to the original and the homeomorphism is exhibited.  For
    the cofinite space the carrier is the singleton closures plus X, one
    point more than eta's image; the new point sits above everything and
    the description agrees with the sobrification since WD(X) = IrrC(X).
    """
    space = as_space(space)
    if space.kind == "cofinite":
        wd = _cofinite_wd_pieces(space)
        irr = _cofinite_irr_pieces(space)
        return CofiniteReflection(
            kind="well-filtered",
            carrier_description="{cl{x} : x in X} plus the class of X itself",
            added_points=1,
            # the class of X meets every diamond: X intersects every
            # nonempty open, so every point closure specializes to it
            new_point_is_top=True,
            reflected_sober=True,
            reflected_well_filtered=True,
            matches_sobrification=(wd == irr),
            compact_both=space.is_compact(FinOrCofinSet.whole()),
        )
    wd = wd_family(space, caps)
    ph = hoare(space, family=wd, family_label="WD(X)", caps=caps)
    return _build_reflection(space, "well-filtered", ph, caps)


# ---------------------------------------------------------------------------
# universal property


@dataclass(frozen=True)
class FactorizationReport:
    f_star: tuple  # carrier index of X^w -> point of Y
    commutes: bool  # f_star after eta equals f
    unique: bool
    candidates: int  # continuous g with g(eta(x)) = f(x) found by the sweep
    uniqueness_mode: str  # "exhaustive" or "bounded"

    @property
    def ok(self):
        return self.commutes and self.unique


def _point_of_closure(y, mask):
    for p in bits_of(mask):
        if y.poset.down_masks[p] == mask:
            return p
    return None


def _check_map(x, y, f):
    if len(f) != x.n:
        raise OrderError("map length does not match the carrier")
    p, q = x.poset, y.poset
    for i in range(x.n):
        for j in range(x.n):
            if p.le(i, j) and not q.le(f[i], f[j]):
                raise OrderError(
                    f"map is not continuous: {i} <= {j} but images are not"
                )


def _f_star_of(reflection, y, f):
    x = reflection.original
    star = []
    for a in reflection.reflected.carrier:
        b = y.closure(image_mask(f, a))
        pt = _point_of_closure(y, b)
        if pt is None:
            raise OrderError(
                "image closure of a WD set is not a point closure; the "
                "target is not well-filtered determined compatible"
            )
        star.append(pt)
    star = tuple(star)
    commutes = all(star[reflection.eta[i]] == f[i] for i in range(x.n))
    return star, commutes


def factorize(x, y, f, caps=DEFAULT_CAPS, reflection=None):
    """Factor a continuous map through the well-filtered reflection.

    f_star sends each WD set A to the unique point whose closure is
    cl(f(A)); uniqueness of the factorization is swept exhaustively over
    all continuous maps of the reflection when the map count fits the cap,
    and otherwise derived from surjectivity of eta (finite carriers are
    the point closures), reported as a bounded sweep.
    """
    x, y = as_space(x), as_space(y)
    if not classify(y, caps).vector.well_filtered:
        raise OrderError("factorization target must be well-filtered")
    if x.kind != "finite" or y.kind != "finite":
        raise UnsupportedOperationError("factorization is materialized for finite spaces")
    f = tuple(f)
    _check_map(x, y, f)
    if reflection is None:
        reflection = wf_reflection(x, caps)
    star, commutes = _f_star_of(reflection, y, f)
    m = reflection.reflected.space.n
    if y.n == 0 or y.n ** m <= caps.max_maps:
        agreeing = [
            g
            for g in continuous_maps(reflection.reflected.space, y, caps)
            if all(g[reflection.eta[i]] == f[i] for i in range(x.n))
        ]
        unique = agreeing == [star]
        return FactorizationReport(
            f_star=star,
            commutes=commutes,
            unique=unique,
            candidates=len(agreeing),
            uniqueness_mode="exhaustive",
        )
    eta_surjective = len(set(reflection.eta)) == m
    return FactorizationReport(
        f_star=star,
        commutes=commutes,
        unique=commutes and eta_surjective,
        candidates=1 if commutes and eta_surjective else 0,
        uniqueness_mode="bounded",
    )


@dataclass(frozen=True)
class BulkFactorization:
    maps_checked: int
    all_commute: bool
    all_unique: bool
    uniqueness_mode: str

    @property
    def ok(self):
        return self.all_commute and self.all_unique


def factorize_all(x, y, caps=DEFAULT_CAPS, reflection=None):
    """Factor every continuous map x -> y at once.

    The uniqueness sweep enumerates the continuous maps of the reflection
    once and buckets them by their restriction along eta, instead of
    re-scanning per map.
    """
    x, y = as_space(x), as_space(y)
    if not classify(y, caps).vector.well_filtered:
        raise OrderError("factorization target must be well-filtered")
    if x.kind != "finite" or y.kind != "finite":
        raise UnsupportedOperationError("factorization is materialized for finite spaces")
    if reflection is None:
        reflection = wf_reflection(x, caps)
    maps = continuous_maps(x, y, caps)
    m = reflection.reflected.space.n
    if y.n == 0 or y.n ** m <= caps.max_maps:
        mode = "exhaustive"
        buckets = {}
        for g in continuous_maps(reflection.reflected.space, y, caps):
            key = tuple(g[reflection.eta[i]] for i in range(x.n))
            buckets.setdefault(key, []).append(g)
    else:
        mode = "bounded"
        buckets = None
    all_commute = True
    all_unique = True
    for f in maps:
        star, commutes = _f_star_of(reflection, y, f)
        all_commute &= commutes
        if buckets is not None:
            all_unique &= buckets.get(f, []) == [star]
        else:
            all_unique &= commutes and len(set(reflection.eta)) == m
    return BulkFactorization(
        maps_checked=len(maps),
        all_commute=all_commute,
        all_unique=all_unique,
        uniqueness_mode=mode,
    )


# ---------------------------------------------------------------------------
# functoriality


@dataclass(frozen=True)
class FunctorAction:
    mapping: tuple  # WD(X) carrier index -> WD(Y) carrier index
    square_commutes: bool
    continuous: bool

    @property
    def ok(self):
        return self.square_commutes and self.continuous


def functor_action(x, y, f, caps=DEFAULT_CAPS, rx=None, ry=None):
    """The reflected map A -> cl(f(A)) between the WD carriers.

    Checked: the square with the two etas commutes, and the reflected map
    is continuous for the Hoare topologies (inclusion-monotone suffices).
    """
    x, y = as_space(x), as_space(y)
    f = tuple(f)
    _check_map(x, y, f)
    if rx is None:
        rx = wf_reflection(x, caps)
    if ry is None:
        ry = wf_reflection(y, caps)
    mapping = []
    for a in rx.reflected.carrier:
        b = y.closure(image_mask(f, a))
        mapping.append(ry.reflected.index_of(b))
    mapping = tuple(mapping)
    square = all(mapping[rx.eta[i]] == ry.eta[f[i]] for i in range(x.n))
    cont = True
    pw, qw = rx.reflected.space.poset, ry.reflected.space.poset
    for i in range(pw.n):
        for j in range(pw.n):
            if pw.le(i, j) and not qw.le(mapping[i], mapping[j]):
                cont = False
    return FunctorAction(mapping=mapping, square_commutes=square, continuous=cont)


@dataclass(frozen=True)
class ProductReflectionReport:
    lhs_size: int  # |WD(product)|
    rhs_size: int  # product of |WD(X_i)|
    gamma: tuple
    bijective: bool
    order_iso: bool

    @property
    def ok(self):
        return self.bijective and self.order_iso


def product_reflection_check(spaces, caps=DEFAULT_CAPS):
    """Compare (prod X_i)^w with prod (X_i^w) via gamma(A) = (p_i(A))_i.

    gamma sends a WD set of the product to the tuple of its projections;
    bijectivity and order preservation in both directions make it a
    homeomorphism of the finite reflections.
    """
    spaces = [as_space(s) for s in spaces]
    pr = product(spaces, caps)
    lhs = wf_reflection(pr.space, caps)
    parts = [wf_reflection(s, caps) for s in spaces]
    rhs = product([p.reflected.space for p in parts], caps)

    gamma = []
    for a in lhs.reflected.carrier:
        idx = []
        for i, (s, part) in enumerate(zip(spaces, parts)):
            proj = s.closure(pr.project_mask(i, a))
            idx.append(part.reflected.index_of(proj))
        gamma.append(rhs.point_index(tuple(idx)))
    gamma = tuple(gamma)

    bijective = len(set(gamma)) == len(gamma) == rhs.space.n
    order_iso = bijective and all(
        lhs.reflected.space.poset.le(i, j) == rhs.space.poset.le(gamma[i], gamma[j])
        for i in range(len(gamma))
        for j in range(len(gamma))
    )
    return ProductReflectionReport(
        lhs_size=lhs.reflected.space.n,
        rhs_size=rhs.space.n,
        gamma=gamma,
        bijective=bijective,
        order_iso=order_iso,
    )


def diamond_lattice_check(reflection):
    """O(X) and O(X^w) are isomorphic lattices via U -> diamond(U)."""
    x = reflection.original
    ph = reflection.reflected
    opens_x = x.open_masks()
    opens_w = ph.space.open_masks()
    image = [ph.diamond(u) for u in opens_x]
    if len(set(image)) != len(opens_x) or set(image) != set(opens_w):
        return False
    for u1, d1 in zip(opens_x, image):
        for u2, d2 in zip(opens_x, image):
            if (u1 & ~u2 == 0) != (d1 & ~d2 == 0):
                return False
    return True
