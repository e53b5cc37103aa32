"""Acceptance gate: eight criteria, one test each, with runtime budgets.

The corpus is shared: every poset with at most 5 points up to isomorphism,
plus 1000 seeded random posets with at most 7 points.  Each test asserts its
own wall-clock budget so a performance regression fails the build visibly.
"""

import json
import time

import numpy as np
import pytest

import oracles
from ordtopo import (
    CofiniteSpace,
    FiniteSpace,
    all_posets,
    bits_of,
    classify,
    continuous_maps,
    enumerate_families,
    factorize_all,
    filtered_subfamilies,
    hoare,
    is_sober_finite,
    mask_of,
    named,
    open_filters_and_phi,
    random_poset,
    rudin_family,
    smyth,
    topological_rudin_minimize,
    union_map_check,
    verify_theorems,
    wd_family,
    wf_reflection,
)
from ordtopo.cli import run_command


@pytest.fixture(scope="module")
def exhaustive_corpus():
    return [p for n in range(6) for p in all_posets(n)]


@pytest.fixture(scope="module")
def random_corpus():
    rng = np.random.default_rng(20260822)
    return [random_poset(rng, 7) for _ in range(1000)]


def relation_of(poset):
    return frozenset(
        (i, j) for i in range(poset.n) for j in range(poset.n) if poset.leq[i, j]
    )


def masks_to_sets(masks):
    return {frozenset(bits_of(m)) for m in masks}


def test_criterion_1_exact_example_ledger():
    started = time.monotonic()
    names = ["chain2", "lambda", "vee", "antichain2", "diamond"]
    for name in names:
        poset = named(name)
        space = FiniteSpace(poset)
        rel = relation_of(poset)
        fams = enumerate_families(space)
        assert masks_to_sets(fams.irr_c) == set(
            oracles.irreducible_closed_sets(poset.n, rel)
        ), name
        assert masks_to_sets(fams.sc) == set(oracles.point_closures(poset.n, rel))
        assert masks_to_sets(fams.dc) == set(oracles.directed_closures(poset.n, rel))
        assert masks_to_sets(fams.k) == set(
            oracles.compact_saturated_sets(poset.n, rel)
        ), name
    lam = FiniteSpace(named("lambda"))
    two = FiniteSpace(named("chain2"))
    assert len(enumerate_families(lam).irr_c) == 3
    assert len(enumerate_families(lam).k) == 4
    assert len(enumerate_families(two).k) == 2
    assert len(open_filters_and_phi(two).ofilt) == 2
    assert time.monotonic() - started < 1.0


def test_criterion_2_inclusion_chain(exhaustive_corpus, random_corpus):
    started = time.monotonic()
    for poset in exhaustive_corpus + random_corpus:
        space = FiniteSpace(poset)
        fams = enumerate_families(space)
        dc = set(fams.dc)
        rd = set(rudin_family(space))
        wd = set(wd_family(space))
        irr = set(fams.irr_c)
        assert dc <= rd <= wd <= irr, poset
    assert time.monotonic() - started < 120.0


def test_criterion_3_equivalence_suites(exhaustive_corpus, random_corpus):
    started = time.monotonic()
    suite = ["d-space.7cond", "wf.equational", "sober.7cond"]
    for poset in exhaustive_corpus + random_corpus:
        reports = verify_theorems(FiniteSpace(poset), ids=suite)
        for r in reports:
            assert r.verdict == "pass", (poset, r.theorem_id, r.detail, r.witness)
    assert time.monotonic() - started < 300.0


def test_criterion_4_cofinite_vector():
    started = time.monotonic()
    c = classify(CofiniteSpace())
    v = c.vector
    assert v.rudin_space is True
    assert v.wd_space is True
    assert v.dc_space is False
    assert v.well_filtered is False
    assert "cofinite" in str(c.witnesses["well_filtered"])
    assert v.sober is False
    assert v.locally_compact is True
    assert v.t1 is True
    assert v.d_space is True
    assert time.monotonic() - started < 1.0


def test_criterion_5_reflection(exhaustive_corpus, random_corpus):
    started = time.monotonic()
    targets = [FiniteSpace(p) for n in range(1, 4) for p in all_posets(n)]
    for y in targets:
        assert classify(y).vector.well_filtered
    for poset in exhaustive_corpus + random_corpus:
        space = FiniteSpace(poset)
        refl = wf_reflection(space)  # eta embedding is validated inside
        assert refl.homeo_to_original, poset
        perm = refl.iso
        for i in range(space.n):
            for j in range(space.n):
                assert space.poset.le(i, j) == refl.reflected.space.poset.le(
                    perm[i], perm[j]
                )
        for y in targets:
            bulk = factorize_all(space, y, reflection=refl)
            assert bulk.all_commute and bulk.all_unique, (poset, y.poset)
    cof = wf_reflection(CofiniteSpace())
    assert cof.added_points == 1
    assert cof.matches_sobrification
    assert time.monotonic() - started < 300.0


def test_criterion_6_power_space_battery():
    started = time.monotonic()
    for poset in [p for n in range(5) for p in all_posets(n)]:
        space = FiniteSpace(poset)
        ps = smyth(space)
        ph = hoare(space)
        assert is_sober_finite(ph.space), poset
        for i, a in enumerate(ps.carrier):
            for j, b in enumerate(ps.carrier):
                assert ps.space.poset.le(i, j) == (b & ~a == 0)
        assert union_map_check(space).ok, poset
        hm = open_filters_and_phi(space)
        assert hm.counts_match and hm.is_bijection and hm.order_iso, poset
    assert time.monotonic() - started < 120.0


def test_criterion_7_rudin_minimizer():
    started = time.monotonic()
    rng = np.random.default_rng(777)
    checked = 0
    while checked < 200:
        poset = random_poset(rng, 6)
        space = FiniteSpace(poset)
        fams, _ = filtered_subfamilies(space.compact_saturated())
        if not fams:
            continue
        family = fams[int(rng.integers(0, len(fams)))]
        candidates = [
            c
            for c in space.closed_masks()
            if c and all(c & k for k in family)
        ]
        if not candidates:
            continue
        c_mask = candidates[int(rng.integers(0, len(candidates)))]
        a = topological_rudin_minimize(space, family, c_mask)
        rel = relation_of(poset)
        sub = frozenset(bits_of(a))
        assert space.is_closed(a)
        assert a & ~c_mask == 0
        assert all(a & k for k in family)
        assert oracles.is_irreducible(poset.n, rel, sub), (poset, family, c_mask)
        for d in space.closed_masks():
            if d and d != a and d & ~a == 0:
                assert not all(d & k for k in family), (poset, family, d)
        checked += 1
    assert time.monotonic() - started < 60.0


def test_criterion_8_determinism(tmp_path):
    f = tmp_path / "lambda.space"
    f.write_text("poset 3\n0 < 1\n0 < 2\n")

    def full_suite():
        blobs = []
        code, lines = run_command(
            ["--format", "records", "--seed", "11", "verify", str(f)]
        )
        assert code == 0
        blobs.extend(lines)
        code, lines = run_command(
            [
                "--format",
                "records",
                "--seed",
                "11",
                "search",
                "--count",
                "20",
                "--max-n",
                "5",
            ]
        )
        assert code == 0
        blobs.extend(lines)
        return "\n".join(blobs).encode()

    first = full_suite()
    second = full_suite()
    assert first == second
    for line in first.decode().splitlines():
        json.loads(line)  # structured output stays parseable
