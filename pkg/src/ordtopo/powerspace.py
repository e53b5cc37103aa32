"""Smyth and Hoare power spaces of finite T0 spaces.

Both power spaces of a finite space are again finite Alexandroff spaces:

* Smyth: carrier K(X) (nonempty saturated sets), specialization order is
  reverse inclusion, topology generated by box(U) = {K : K inside U}.  On a
  finite space every box set is an up-set of reverse inclusion and every
  principal up-set equals box(K), so the upper Vietoris topology is exactly
  the Alexandroff topology of reverse inclusion.  The constructor checks both
  inclusions rather than assuming them.

* Hoare: carrier a family of nonempty closed sets, order inclusion, topology
  generated by diamond(U) = {A : A meets U}.  For a finite base space each
  principal up-set of the family is the finite intersection of the diamonds
  of the points' open filters, so again the topology is Alexandroff; the
  constructor checks this too.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError, OrderError
from .poset import FinPoset, bits_of, sorted_masks
from .space import (
    DEFAULT_CAPS,
    FiniteSpace,
    as_space,
    enumerate_families,
    filtered_subfamilies,
    is_sober_finite,
)


class PowerSpace:
    """A power space presented as a finite space over a carrier of subsets.

    carrier[i] is the i-th member (a mask over the base space), listed in
    canonical order; space is the Alexandroff space of the power order.
    """

    def __init__(self, base, variant, family_label, carrier, space):
        self.base = base
        self.variant = variant
        self.family_label = family_label
        self.carrier = carrier
        self.space = space
        self._index = {m: i for i, m in enumerate(carrier)}

    def index_of(self, member_mask):
        if member_mask not in self._index:
            raise OrderError(
                f"{self.base.describe(member_mask)} is not in {self.family_label}"
            )
        return self._index[member_mask]

    def member_set_mask(self, members):
        """Mask over the power carrier selecting the given base-space masks."""
        m = 0
        for x in members:
            m |= 1 << self.index_of(x)
        return m

    def box(self, u_mask):
        """Indices of members contained in an open set (upper Vietoris basic)."""
        m = 0
        for i, k in enumerate(self.carrier):
            if k & ~u_mask == 0:
                m |= 1 << i
        return m

    def diamond(self, u_mask):
        """Indices of members meeting an open set (lower Vietoris basic)."""
        m = 0
        for i, k in enumerate(self.carrier):
            if k & u_mask:
                m |= 1 << i
        return m

    def __repr__(self):
        return (
            f"PowerSpace({self.variant}, {self.family_label}, "
            f"|carrier|={len(self.carrier)})"
        )


def power_order(carrier, reverse):
    """FinPoset on a carrier of masks: inclusion, or reverse inclusion."""
    m = len(carrier)
    leq = np.zeros((m, m), dtype=bool)
    for i, a in enumerate(carrier):
        for j, b in enumerate(carrier):
            inside = (b & ~a == 0) if reverse else (a & ~b == 0)
            leq[i, j] = inside
    return FinPoset(leq)


def smyth(space, caps=DEFAULT_CAPS):
    """Smyth power space over K(X), with the topology agreement checked."""
    space = as_space(space)
    if space.kind != "finite":
        raise OrderError("power spaces are built over finite spaces")
    carrier = space.compact_saturated()
    if len(carrier) > caps.max_powerspace:
        raise CapExceededError(
            f"|K(X)| = {len(carrier)} exceeds the power-space cap {caps.max_powerspace}"
        )
    ps = PowerSpace(
        base=space,
        variant="smyth",
        family_label="K(X)",
        carrier=carrier,
        space=FiniteSpace(power_order(carrier, reverse=True)),
    )
    # upper Vietoris = Alexandroff of reverse inclusion, both directions
    for u in space.open_masks():
        if not ps.space.is_open(ps.box(u)):
            raise OrderError("box of an open set is not open in the Smyth order")
    for i, k in enumerate(carrier):
        # K is itself open, and its principal up-set must be box(K)
        if ps.space.saturation(1 << i) != ps.box(k):
            raise OrderError("principal up-set differs from box(K)")
    return ps


def xi_map(space, ps=None, caps=DEFAULT_CAPS):
    """x -> up(x) into the Smyth power space, with the embedding checks:
    injective, continuous, and open onto its image."""
    space = as_space(space)
    if ps is None:
        ps = smyth(space, caps)
    xi = tuple(ps.index_of(space.poset.up_masks[x]) for x in range(space.n))
    if len(set(xi)) != space.n:
        raise OrderError("xi is not injective; the space is not T0")
    image = 0
    for i in xi:
        image |= 1 << i
    for u in space.open_masks():
        pre = 0
        for x in range(space.n):
            if ps.box(u) >> xi[x] & 1:
                pre |= 1 << x
        if pre != u:
            raise OrderError("xi is not continuous: preimage of box(U) is not U")
        im_u = 0
        for x in bits_of(u):
            im_u |= 1 << xi[x]
        if im_u != ps.box(u) & image:
            raise OrderError("xi is not open onto its image")
    return xi


_HOARE_PRESETS = ("closed", "irr", "sc")


def hoare(space, preset="closed", family=None, family_label=None, caps=DEFAULT_CAPS):
    """Hoare power space over a family of nonempty closed sets.

    preset picks the carrier: "closed" (all nonempty closed sets), "irr"
    (irreducible closed sets), "sc" (point closures).  An explicit family
    overrides the preset; members must be nonempty and closed.
    """
    space = as_space(space)
    if space.kind != "finite":
        raise OrderError("power spaces are built over finite spaces")
    if family is not None:
        members = set(family)
        label = family_label or "custom"
        for a in members:
            if a == 0:
                raise OrderError("the empty set is not allowed in a Hoare carrier")
            if not space.is_closed(a):
                raise OrderError(
                    f"{space.describe(a)} is not closed, so it cannot enter the carrier"
                )
        carrier = sorted_masks(members, space.n)
    else:
        if preset not in _HOARE_PRESETS:
            raise OrderError(f"unknown Hoare preset {preset!r}")
        fams = enumerate_families(space, caps)
        if preset == "closed":
            carrier = tuple(m for m in space.closed_masks() if m)
            label = "C(X) \\ {0}"
        elif preset == "irr":
            carrier = fams.irr_c
            label = "IrrC(X)"
        else:
            carrier = fams.sc
            label = "Sc(X)"
        if family_label:
            label = family_label
    if len(carrier) > caps.max_powerspace:
        raise CapExceededError(
            f"Hoare carrier {len(carrier)} exceeds the power-space cap {caps.max_powerspace}"
        )
    ph = PowerSpace(
        base=space,
        variant="hoare",
        family_label=label,
        carrier=carrier,
        space=FiniteSpace(power_order(carrier, reverse=False)),
    )
    # lower Vietoris = Alexandroff of inclusion on any family of closed sets
    for u in space.open_masks():
        if not ph.space.is_open(ph.diamond(u)):
            raise OrderError("diamond of an open set is not an inclusion up-set")
    for i, a in enumerate(carrier):
        expected = ph.space.full
        for x in bits_of(a):
            expected &= ph.diamond(space.poset.up_masks[x])
        if ph.space.saturation(1 << i) != expected:
            raise OrderError(
                "principal up-set is not the expected intersection of diamonds"
            )
    return ph


def eta_map(space, ph, caps=DEFAULT_CAPS):
    """x -> cl{x} into a Hoare power space whose carrier contains all point
    closures; checked to be an embedding."""
    space = as_space(space)
    eta = tuple(ph.index_of(space.poset.down_masks[x]) for x in range(space.n))
    if len(set(eta)) != space.n:
        raise OrderError("eta is not injective; the space is not T0")
    image = 0
    for i in eta:
        image |= 1 << i
    for u in space.open_masks():
        pre = 0
        for x in range(space.n):
            if ph.diamond(u) >> eta[x] & 1:
                pre |= 1 << x
        if pre != u:
            raise OrderError("eta is not continuous: preimage of diamond(U) is not U")
        im_u = 0
        for x in bits_of(u):
            im_u |= 1 << eta[x]
        if im_u != ph.diamond(u) & image:
            raise OrderError("eta is not open onto its image")
    return eta


def smyth_irreducible(space, members):
    """Whether a family of compact saturated sets is irreducible as a subset
    of the Smyth power space.

    In an Alexandroff space a subset is irreducible iff it is directed in the
    specialization order; for the Smyth order this is exactly filteredness:
    any two members contain a third inside their intersection.
    """
    space = as_space(space)
    members = list(members)
    if not members:
        return False
    for k in members:
        if k == 0 or not space.poset.is_upper(k):
            raise OrderError(
                f"{space.describe(k)} is not a nonempty saturated set"
            )
    for a in members:
        for b in members:
            inter = a & b
            if not any(k & ~inter == 0 for k in members):
                return False
    return True


@dataclass(frozen=True)
class UnionMapReport:
    families_checked: int
    union_compact_ok: bool
    continuity_ok: bool
    meet_remark_ok: bool
    mode: str

    @property
    def ok(self):
        return self.union_compact_ok and self.continuity_ok and self.meet_remark_ok


def union_map_check(space, caps=DEFAULT_CAPS):
    """Checks on the union map K(P_S(X)) -> K(X).

    * every compact saturated family of the Smyth space has a compact union,
    * the union map is continuous (preimage of box(U) is Smyth-open),
    * the meet remark: any nonempty family of K(X) has the same intersection
      as its Smyth closure (the closure only adds supersets).

    Families are enumerated exhaustively when |K(X)| is within the family cap.
    """
    space = as_space(space)
    ps = smyth(space, caps)
    m = len(ps.carrier)
    if m > caps.max_family_base:
        raise CapExceededError(
            f"union-map check enumerates 2^|K(X)| families; |K(X)| = {m} "
            f"exceeds the base cap {caps.max_family_base}"
        )
    # K(P_S(X)): nonempty up-sets of the Smyth order, as masks over the carrier
    kps = ps.space.compact_saturated()
    union_ok = True
    unions = {}
    for fam in kps:
        u = 0
        for i in bits_of(fam):
            u |= ps.carrier[i]
        unions[fam] = u
        if u == 0 or not space.poset.is_upper(u):
            union_ok = False
    continuity_ok = True
    for u_open in space.open_masks():
        pre = {fam for fam in kps if unions[fam] & ~u_open == 0}
        # open in P_S(P_S(X)) means up-closed under reverse inclusion of families
        for fam in pre:
            for other in kps:
                if other & ~fam == 0 and other not in pre:
                    continuity_ok = False
    meet_ok = True
    for bits in range(1, 1 << m):
        inter = space.full
        closure_inter = space.full
        for i in range(m):
            if bits >> i & 1:
                inter &= ps.carrier[i]
                # Smyth closure adds every superset of a member
                for k in ps.carrier:
                    if ps.carrier[i] & ~k == 0:
                        closure_inter &= k
        if inter != closure_inter:
            meet_ok = False
    return UnionMapReport(
        families_checked=len(kps),
        union_compact_ok=union_ok,
        continuity_ok=continuity_ok,
        meet_remark_ok=meet_ok,
        mode="exhaustive",
    )


@dataclass(frozen=True)
class OpenFilterReport:
    """Scott-open filters of O(X) against compact saturated sets.

    ofilt[i] is a filter as a frozenset of open masks; phi maps each K in
    K(X) to its open filter {U : K inside U}.
    """

    ofilt: tuple
    phi: dict
    counts_match: bool
    phi_injective: bool
    phi_surjective: bool
    order_iso: bool
    sober_consistent: bool

    @property
    def is_bijection(self):
        return self.phi_injective and self.phi_surjective


def open_filters_and_phi(space, caps=DEFAULT_CAPS):
    """Scott-open filters of the open-set lattice, and Phi(K) = opens above K.

    On a finite lattice every filter is the principal up-set of its least
    member and every up-set is Scott-open, so the Scott-open filters that
    avoid the empty open are exactly {U : W inside U} for nonempty open W.
    The tests verify this collapse against a definitional enumeration.
    """
    space = as_space(space)
    if space.kind != "finite":
        raise OrderError("open-filter analysis needs a finite space")
    opens = space.open_masks()
    ofilt = []
    for w in opens:
        if w == 0:
            continue
        ofilt.append(frozenset(u for u in opens if w & ~u == 0))
    ofilt = tuple(sorted(ofilt, key=lambda f: sorted(f)))
    kx = space.compact_saturated()
    phi = {k: frozenset(u for u in opens if k & ~u == 0) for k in kx}
    values = list(phi.values())
    injective = len(set(values)) == len(values)
    surjective = set(values) == set(ofilt)
    order_iso = True
    for a in kx:
        for b in kx:
            # a below b in Smyth order means b inside a
            if (b & ~a == 0) != (phi[a] <= phi[b]):
                order_iso = False
    sober = is_sober_finite(space)
    return OpenFilterReport(
        ofilt=ofilt,
        phi=phi,
        counts_match=len(ofilt) == len(kx),
        phi_injective=injective,
        phi_surjective=surjective,
        order_iso=order_iso,
        sober_consistent=sober == (injective and surjective and order_iso),
    )


def irr_open_filter(space, members):
    """The open filter induced by an irreducible family of compact saturated
    sets: F = {U open : some member lies inside U}.

    Asserts that F is a Scott-open filter of O(X) and that the Smyth closure
    of the family (adding supersets of members) induces the same filter.
    """
    space = as_space(space)
    members = list(members)
    if not smyth_irreducible(space, members):
        raise OrderError("the family is not irreducible in the Smyth power space")
    opens = space.open_masks()
    f = frozenset(u for u in opens if any(k & ~u == 0 for k in members))
    if not f:
        raise OrderError("induced filter is empty")
    if 0 in f:
        raise OrderError("induced filter contains the empty open")
    for u in f:
        for v in opens:
            if u & ~v == 0 and v not in f:
                raise OrderError("induced filter is not an upper set")
    for u in f:
        for v in f:
            if u & v not in f:
                raise OrderError("induced filter is not closed under intersection")
    closure = set(members)
    for k in space.compact_saturated():
        if any(m & ~k == 0 for m in members):
            closure.add(k)
    f_cl = frozenset(u for u in opens if any(k & ~u == 0 for k in closure))
    if f != f_cl:
        raise OrderError("closure of the family changed the induced filter")
    return f
