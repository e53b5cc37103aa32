"""Classification flags, the implication graph, and the theorem registry."""

import numpy as np
import pytest

import oracles
from ordtopo import (
    Caps,
    CapExceededError,
    CofiniteSpace,
    EQUATIONS,
    FLAGS,
    FAIL,
    FiniteSpace,
    NOT_APPLICABLE,
    OrderError,
    PASS,
    THEOREMS,
    TheoremReport,
    UnsupportedOperationError,
    all_posets,
    antichain,
    bits_of,
    chain,
    check_implications,
    classify,
    diamond_poset,
    equational_probe,
    lambda_poset,
    named,
    random_poset,
    verify_theorems,
)


NON_T1_FLAGS = tuple(f for f in FLAGS if f != "t1")


def is_antichain(poset):
    return all(
        not poset.le(i, j) for i in range(poset.n) for j in range(poset.n) if i != j
    )


@pytest.mark.parametrize("n", range(5))
def test_finite_vectors(n):
    # finite T0 spaces are sober, which drags every non-separation flag true;
    # t1 holds exactly on the antichains
    for poset in all_posets(n):
        c = classify(FiniteSpace(poset))
        assert c.kind == "finite"
        d = c.vector.as_dict()
        assert set(d) == set(FLAGS)
        for f in NON_T1_FLAGS:
            assert d[f] is True, (poset, f)
        assert d["t1"] == is_antichain(poset)
        assert check_implications(c.vector) == []


def test_witnesses_only_for_false_flags():
    c = classify(FiniteSpace(lambda_poset()))
    assert set(c.witnesses) == {"t1"}
    assert c.witnesses["t1"]["pair"] == ["0", "1"] or c.witnesses["t1"]["pair"] == [
        0,
        1,
    ]
    c2 = classify(FiniteSpace(antichain(2)))
    assert c2.vector.t1 and not c2.witnesses


def test_implication_closure_rejects_bad_vectors():
    from ordtopo import ClassificationVector

    good = classify(FiniteSpace(chain(2))).vector
    bad = ClassificationVector(
        **{**good.as_dict(), "sober": True, "well_filtered": False}
    )
    violations = check_implications(bad)
    assert ("sober", "well_filtered") in violations


COFINITE_EXPECTED = {
    "t1": True,
    "d_space": True,
    "d_bounded": True,
    "well_filtered": False,
    "sober": False,
    "dc_space": False,
    "rudin_space": True,
    "wd_space": True,
    "locally_compact": True,
    "core_compact": True,
    "locally_hypercompact": False,
    "c_space": False,
    "ftip": False,
    "rip": False,
    "irreducible_complete": False,
    "r_bounded": False,
}


def test_cofinite_vector_is_exact():
    c = classify(CofiniteSpace())
    assert c.kind == "cofinite"
    assert c.vector.as_dict() == COFINITE_EXPECTED
    assert check_implications(c.vector) == []
    # false flags carry witnesses; the well-filtered one names the tail family
    for flag, value in COFINITE_EXPECTED.items():
        if not value:
            assert flag in c.witnesses, flag
    assert "cofinite" in str(c.witnesses["well_filtered"])


def test_sober_iff_well_filtered_and_wd():
    for n in range(4):
        for poset in all_posets(n):
            v = classify(FiniteSpace(poset)).vector
            assert v.sober == (v.well_filtered and v.wd_space)
    v = classify(CofiniteSpace()).vector
    assert v.sober == (v.well_filtered and v.wd_space)


class TestEquationalProbe:
    lam = FiniteSpace(lambda_poset())

    def test_d_space_equation(self):
        probe = equational_probe(
            self.lam, "d-space.upper-eq", {"directed": 0b001, "closed": 0b011}
        )
        assert probe.holds
        assert probe.equation == "d-space.upper-eq"

    def test_wf_equation(self):
        probe = equational_probe(
            self.lam, "wf.upper-eq", {"family": [0b110, 0b010], "closed": 0b011}
        )
        assert probe.holds

    def test_sober_equation(self):
        probe = equational_probe(
            self.lam, "sober.upper-eq", {"irreducible": 0b011, "closed": 0b111}
        )
        assert probe.holds

    def test_equations_hold_everywhere_on_finite(self):
        # the equational characterizations are theorems on finite spaces:
        # sweep every valid binding on every poset with at most 4 points
        for n in range(1, 5):
            for poset in all_posets(n):
                space = FiniteSpace(poset)
                closed = space.closed_masks()
                for d in range(1, 1 << poset.n):
                    if not poset.is_directed(d):
                        continue
                    for a in closed:
                        probe = equational_probe(
                            space, "d-space.upper-eq", {"directed": d, "closed": a}
                        )
                        assert probe.holds, (poset, d, a)

    def test_bad_bindings(self):
        with pytest.raises(OrderError):
            equational_probe(
                self.lam, "d-space.upper-eq", {"directed": 0b110, "closed": 0b011}
            )
        with pytest.raises(OrderError):
            equational_probe(
                self.lam, "d-space.upper-eq", {"directed": 0b001, "closed": 0b110}
            )
        with pytest.raises(OrderError):
            equational_probe(self.lam, "parallelogram-eq", {})

    def test_cofinite_is_unsupported(self):
        with pytest.raises(UnsupportedOperationError):
            equational_probe(
                CofiniteSpace(), "d-space.upper-eq", {"directed": 0, "closed": 0}
            )

    def test_equation_names_are_exported(self):
        assert set(EQUATIONS) == {
            "d-space.upper-eq",
            "wf.upper-eq",
            "sober.upper-eq",
        }


@pytest.mark.parametrize("name", ["chain2", "lambda", "vee", "diamond", "antichain3"])
def test_registry_passes_on_named_instances(name):
    space = FiniteSpace(named(name))
    reports = verify_theorems(space)
    assert len(reports) == len(THEOREMS)
    for r in reports:
        assert r.verdict in (PASS, NOT_APPLICABLE), (r.theorem_id, r.detail)
        assert r.verdict == PASS or r.detail


def test_registry_on_cofinite():
    reports = verify_theorems(CofiniteSpace())
    by_id = {r.theorem_id: r for r in reports}
    assert len(by_id) == len(THEOREMS)
    passing = {i for i, r in by_id.items() if r.verdict == PASS}
    assert passing == {
        "d-space.7cond",
        "wf.rudin-chain",
        "wf.wd-sc",
        "chain.inclusion",
        "sober.equiv",
        "sober.core-compact-wf",
        "rudin.local-compact",
        "wd.core-compact",
    }
    for i, r in by_id.items():
        if i not in passing:
            assert r.verdict == NOT_APPLICABLE
            assert "infinite" in r.detail or "cofinite" in r.detail


def test_unknown_theorem_id():
    with pytest.raises(OrderError):
        verify_theorems(FiniteSpace(chain(2)), ids=["fermat.last"])


def test_cap_exceeded_goes_not_applicable():
    space = FiniteSpace(chain(6))
    reports = verify_theorems(space, ids=["wf.equational"], caps=Caps(max_carrier=4))
    assert reports[0].verdict == NOT_APPLICABLE
    assert "cap" in reports[0].detail


def test_theorem_report_shape():
    r = TheoremReport("x", PASS)
    assert r.witness is None
    with pytest.raises(OrderError):
        TheoremReport("x", FAIL)  # fail needs a witness
    with pytest.raises(OrderError):
        TheoremReport("x", "maybe")


def test_suite_subset_and_order():
    space = FiniteSpace(lambda_poset())
    ids = ["hofmann-mislove", "sober.equiv", "rudin.meet"]
    reports = verify_theorems(space, ids=ids)
    assert [r.theorem_id for r in reports] == ids


def test_way_below_is_inclusion_on_small_open_lattices():
    # core-compactness hinges on this collapse; verify it definitionally on
    # every open lattice with at most 20 elements.  The directed subsets and
    # their suprema are gathered once per lattice, then every pair is tested
    # against the full list, which is the way-below definition verbatim.
    rng = np.random.default_rng(5)
    posets = [p for n in range(1, 5) for p in all_posets(n)]
    posets += [random_poset(rng, 5) for _ in range(20)]
    for poset in posets:
        rel = frozenset(
            (i, j) for i in range(poset.n) for j in range(poset.n) if poset.leq[i, j]
        )
        elems, leq = oracles.lattice_of_opens(poset.n, rel)
        m = len(elems)
        if m > 20:
            continue
        up = [frozenset(j for j in range(m) if (i, j) in leq) for i in range(m)]
        directed = []
        for bits in range(1, 1 << m):
            d = frozenset(i for i in range(m) if bits >> i & 1)
            if not oracles.is_directed(m, leq, d):
                continue
            ub = oracles.upper_bounds(m, leq, d)
            sups = [s for s in ub if all((s, t) in leq for t in ub)]
            if sups:
                directed.append((d, sups[0]))
        for u in range(m):
            for v in range(m):
                below = all(
                    (v, sup) not in leq or bool(d & up[u]) for d, sup in directed
                )
                assert below == ((u, v) in leq), (poset, elems[u], elems[v])


def test_registry_ids_are_stable():
    assert len(THEOREMS) == 33
    assert "chain.inclusion" in THEOREMS
    assert "hofmann-mislove" in THEOREMS
    assert "smyth.wd-transfer" in THEOREMS
