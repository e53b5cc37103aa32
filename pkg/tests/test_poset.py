"""Order layer against the naive oracles."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from ordtopo import (
    FinPoset,
    OrderError,
    bits_of,
    bounds_and_cut,
    closures,
    extremes,
    mask_of,
    order_predicates,
    random_poset,
    sorted_masks,
    subset_key,
)


def from_relation(n, pairs):
    rel = oracles.reflexive_transitive_closure(n, pairs)
    leq = np.zeros((n, n), dtype=bool)
    for i, j in rel:
        leq[i, j] = True
    return FinPoset(leq), rel


SMALL = {name: from_relation(*oracles.NAMED[name]) for name in oracles.NAMED}


def masks_to_sets(masks):
    return {frozenset(bits_of(m)) for m in masks}


def test_rejects_non_orders():
    with pytest.raises(OrderError):
        FinPoset(np.zeros((2, 2), dtype=bool))  # not reflexive
    bad = np.eye(2, dtype=bool)
    bad[0, 1] = bad[1, 0] = True
    with pytest.raises(OrderError):
        FinPoset(bad)  # not antisymmetric
    tri = np.eye(3, dtype=bool)
    tri[0, 1] = tri[1, 2] = True
    with pytest.raises(OrderError):
        FinPoset(tri)  # not transitive
    with pytest.raises(OrderError):
        FinPoset(np.zeros((2, 3), dtype=bool))


@pytest.mark.parametrize("name", sorted(oracles.NAMED))
def test_closures_and_bounds_match_oracle(name):
    poset, rel = SMALL[name]
    n = poset.n
    for sub in oracles.all_subsets(n):
        m = mask_of(sub)
        assert set(bits_of(poset.down(m))) == oracles.down_closure(n, rel, sub)
        assert set(bits_of(poset.up(m))) == oracles.up_closure(n, rel, sub)
        assert set(bits_of(poset.upper_bounds(m))) == oracles.upper_bounds(n, rel, sub)
        assert set(bits_of(poset.lower_bounds(m))) == oracles.lower_bounds(n, rel, sub)
        assert poset.is_lower(m) == oracles.is_lower_set(n, rel, sub)
        assert poset.is_upper(m) == oracles.is_upper_set(n, rel, sub)
        assert poset.is_directed(m) == oracles.is_directed(n, rel, sub)
        assert set(bits_of(poset.maximal(m))) == oracles.maximal_elements(n, rel, sub)
        assert set(bits_of(poset.minimal(m))) == oracles.minimal_elements(n, rel, sub)


@pytest.mark.parametrize("name", sorted(oracles.NAMED))
def test_set_families_match_oracle(name):
    poset, rel = SMALL[name]
    n = poset.n
    lower = masks_to_sets(poset.lower_set_masks())
    assert lower == set(oracles.closed_sets(n, rel))
    upper = masks_to_sets(poset.up_set_masks())
    assert upper == set(oracles.open_sets(n, rel))


def test_greatest_and_least():
    lam = SMALL["lambda"][0]
    assert lam.least(lam.full) == 0
    assert lam.greatest(lam.full) is None
    assert lam.greatest(0b010) == 1
    assert lam.least(0) is None
    dia = SMALL["diamond"][0]
    assert dia.greatest(dia.full) == 3
    assert dia.least_upper_bound(0b0110) == 3
    assert lam.least_upper_bound(0b110) is None


def test_helper_functions():
    assert mask_of([0, 2]) == 0b101
    assert tuple(bits_of(0b1011)) == (0, 1, 3)
    assert mask_of(bits_of(37)) == 37
    # sorted by size then reversed-bit string, stable across runs
    ms = sorted_masks([0b11, 0b1, 0b10, 0b0], 2)
    assert ms == sorted(ms, key=lambda m: subset_key(m, 2))
    assert ms[0] == 0


def test_describe_and_relabel():
    poset, _ = SMALL["vee"]
    assert poset.describe(0b101) == [0, 2]
    labeled = FinPoset(poset.leq, labels=["a", "b", "c"])
    assert labeled.describe(0b101) == ["a", "c"]
    flipped = poset.relabeled([2, 1, 0])
    assert flipped.le(2, 0) == poset.le(0, 2)


@st.composite
def posets(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    return random_poset(rng, 6)


@settings(max_examples=60, deadline=None)
@given(posets(), st.integers(0, 63))
def test_closure_operators_are_idempotent_and_monotone(poset, raw):
    m = raw & poset.full
    down, up = closures(poset, m)
    assert poset.down(down) == down
    assert poset.up(up) == up
    assert down | m == down and up | m == up
    assert poset.is_lower(down) and poset.is_upper(up)
    # complement of a lower set is upper
    assert poset.is_upper(poset.full & ~down)


@settings(max_examples=60, deadline=None)
@given(posets(), st.integers(0, 63))
def test_directed_subsets_have_suprema(poset, raw):
    # the finite collapse behind the dcpo flag: a nonempty finite directed
    # set has a greatest element, hence a supremum inside itself
    m = raw & poset.full
    preds = order_predicates(poset, m)
    assert preds.is_dcpo and preds.is_noetherian
    if preds.is_directed:
        g = poset.greatest(m)
        assert g is not None
        assert poset.least_upper_bound(m) == g
    assert preds.is_ideal == (preds.is_directed and preds.is_lower)


def test_bundles_on_named():
    lam = SMALL["lambda"][0]
    preds = order_predicates(lam, 0b001)
    assert preds.is_dcpo and preds.is_noetherian and preds.is_ideal
    down, up = closures(lam, 0b100)
    assert down == 0b101 and up == 0b100
    mx, mn = extremes(lam, lam.full)
    assert set(bits_of(mx)) == {1, 2}
    assert tuple(bits_of(mn)) == (0,)
    with pytest.raises(OrderError):
        extremes(lam, 0)
    ub, lb, cut = bounds_and_cut(lam, 0b110)
    assert ub == 0
    assert lb == 0b001
    assert cut == lam.full  # lower bounds of the empty upper-bound set
    with pytest.raises(OrderError):
        lam.mask([5])
