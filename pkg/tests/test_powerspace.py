"""Smyth and Hoare power spaces, embeddings, and the open-filter bijection."""

import pytest

import oracles
from ordtopo import (
    Caps,
    CapExceededError,
    FiniteSpace,
    OrderError,
    all_posets,
    antichain,
    bits_of,
    chain,
    diamond_poset,
    eta_map,
    hoare,
    irr_open_filter,
    lambda_poset,
    mask_of,
    named,
    open_filters_and_phi,
    power_order,
    smyth,
    smyth_irreducible,
    union_map_check,
    vee_poset,
    xi_map,
)


def relation_of(poset):
    return frozenset(
        (i, j) for i in range(poset.n) for j in range(poset.n) if poset.leq[i, j]
    )


SMALL = [p for n in range(1, 4) for p in all_posets(n)]


def power_opens(ps):
    """Opens of the power space, as frozensets of carrier indices."""
    return {frozenset(bits_of(m)) for m in ps.space.open_masks()}


@pytest.mark.parametrize("idx", range(len(SMALL)))
def test_smyth_topology_is_generated_by_boxes(idx):
    poset = SMALL[idx]
    space = FiniteSpace(poset)
    ps = smyth(space)
    generators = [
        frozenset(bits_of(ps.box(u))) for u in space.open_masks()
    ]
    expected = oracles.topology_from_subbase(len(ps.carrier), generators)
    assert power_opens(ps) == expected


@pytest.mark.parametrize("idx", range(len(SMALL)))
def test_hoare_topology_is_generated_by_diamonds(idx):
    poset = SMALL[idx]
    space = FiniteSpace(poset)
    ph = hoare(space)
    generators = [
        frozenset(bits_of(ph.diamond(u))) for u in space.open_masks()
    ]
    expected = oracles.topology_from_subbase(len(ph.carrier), generators)
    assert power_opens(ph) == expected


def test_smyth_carrier_and_order():
    lam = FiniteSpace(lambda_poset())
    ps = smyth(lam)
    # K(Lambda): the four nonempty up-sets
    assert {frozenset(bits_of(k)) for k in ps.carrier} == {
        frozenset({1}),
        frozenset({2}),
        frozenset({1, 2}),
        frozenset({0, 1, 2}),
    }
    # order is reverse inclusion
    for i, a in enumerate(ps.carrier):
        for j, b in enumerate(ps.carrier):
            assert ps.space.poset.le(i, j) == (b & ~a == 0)


def test_hoare_presets():
    lam = FiniteSpace(lambda_poset())
    closed = hoare(lam, "closed")
    irr = hoare(lam, "irr")
    sc = hoare(lam, "sc")
    assert len(closed.carrier) == 4  # nonempty down-sets of Lambda
    assert len(irr.carrier) == 3
    assert set(irr.carrier) == set(sc.carrier)  # finite T0 collapse
    assert irr.family_label == "IrrC(X)"
    # order is inclusion
    for i, a in enumerate(closed.carrier):
        for j, b in enumerate(closed.carrier):
            assert closed.space.poset.le(i, j) == (a & ~b == 0)
    with pytest.raises(OrderError):
        hoare(lam, "scott")
    with pytest.raises(OrderError):
        hoare(lam, family=[0b011, 0])  # empty member
    with pytest.raises(OrderError):
        hoare(lam, family=[0b010])  # {1} is not closed


def test_power_space_index_helpers():
    lam = FiniteSpace(lambda_poset())
    ps = smyth(lam)
    for i, k in enumerate(ps.carrier):
        assert ps.index_of(k) == i
    assert ps.member_set_mask([ps.carrier[0], ps.carrier[2]]) == 0b101
    with pytest.raises(OrderError):
        ps.index_of(0b001)  # {0} is not saturated


def test_caps_are_enforced():
    with pytest.raises(CapExceededError):
        smyth(FiniteSpace(antichain(4)), Caps(max_powerspace=8))
    with pytest.raises(CapExceededError):
        hoare(FiniteSpace(antichain(4)), caps=Caps(max_powerspace=8))


@pytest.mark.parametrize("idx", range(len(SMALL)))
def test_xi_and_eta_are_embeddings(idx):
    poset = SMALL[idx]
    space = FiniteSpace(poset)
    ps = smyth(space)
    xi = xi_map(space, ps)
    for x in range(space.n):
        assert ps.carrier[xi[x]] == space.poset.up_masks[x]
    ph = hoare(space, "closed")
    eta = eta_map(space, ph)
    for x in range(space.n):
        assert ph.carrier[eta[x]] == space.poset.down_masks[x]
    # both reflect the specialization order
    for x in range(space.n):
        for y in range(space.n):
            assert ps.space.poset.le(xi[x], xi[y]) == space.poset.le(x, y)
            assert ph.space.poset.le(eta[x], eta[y]) == space.poset.le(x, y)


def test_eta_needs_all_point_closures():
    lam = FiniteSpace(lambda_poset())
    partial = hoare(lam, family=[0b001, 0b111], family_label="partial")
    with pytest.raises(OrderError):
        eta_map(lam, partial)


@pytest.mark.parametrize("idx", range(len(SMALL)))
def test_smyth_irreducible_matches_definition(idx):
    poset = SMALL[idx]
    space = FiniteSpace(poset)
    ps = smyth(space)
    n_k = len(ps.carrier)
    rel = relation_of(ps.space.poset)
    for bits in range(1 << n_k):
        members = [ps.carrier[i] for i in range(n_k) if bits >> i & 1]
        sub = frozenset(i for i in range(n_k) if bits >> i & 1)
        assert smyth_irreducible(space, members) == oracles.is_irreducible(
            n_k, rel, sub
        )


def test_smyth_irreducible_rejects_bad_members():
    lam = FiniteSpace(lambda_poset())
    with pytest.raises(OrderError):
        smyth_irreducible(lam, [0b001])  # {0} is not an up-set


@pytest.mark.parametrize("idx", range(len(SMALL)))
def test_union_map_report(idx):
    report = union_map_check(FiniteSpace(SMALL[idx]))
    assert report.ok
    assert report.mode == "exhaustive"
    assert report.families_checked > 0


def test_union_map_cap():
    with pytest.raises(CapExceededError):
        union_map_check(FiniteSpace(antichain(3)), Caps(max_family_base=4))


@pytest.mark.parametrize("idx", range(len(SMALL)))
def test_open_filters_match_oracle(idx):
    poset = SMALL[idx]
    space = FiniteSpace(poset)
    report = open_filters_and_phi(space)
    got = {frozenset(frozenset(bits_of(u)) for u in f) for f in report.ofilt}
    expected = set(oracles.scott_open_filters_of_opens(poset.n, relation_of(poset)))
    assert got == expected
    # Hofmann-Mislove on a finite sober space: a bijection and an order iso
    assert report.counts_match
    assert report.is_bijection
    assert report.order_iso
    assert report.sober_consistent


def test_named_counts():
    # |K| = |OFilt| on the named instances, with the frozen counts
    expected = {"chain2": 2, "antichain2": 3, "lambda": 4, "vee": 4, "diamond": 5}
    for name, count in expected.items():
        space = FiniteSpace(named(name))
        report = open_filters_and_phi(space)
        assert len(report.ofilt) == count
        assert len(report.phi) == count


def test_irr_open_filter():
    lam = FiniteSpace(lambda_poset())
    ps = smyth(lam)
    # a filtered family: {1, 2} and its superset
    fam = [0b110, 0b111]
    f = irr_open_filter(lam, fam)
    assert 0b110 in f
    assert 0 not in f
    with pytest.raises(OrderError):
        irr_open_filter(lam, [0b010, 0b100])  # up(1), up(2): not filtered


def test_power_order_standalone():
    carrier = (0b01, 0b11, 0b10)
    inc = power_order(carrier, reverse=False)
    rev = power_order(carrier, reverse=True)
    assert inc.le(0, 1) and not inc.le(1, 0)
    assert rev.le(1, 0) and not rev.le(0, 1)
    assert not inc.le(0, 2) and not rev.le(0, 2)
