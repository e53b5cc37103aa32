"""
Seeded random search over small posets
======================================

Draws random finite T0 spaces, runs the characterization registry on
each, and tallies the outcomes.  The draw is deterministic in the seed,
so a rerun reproduces the same instances and the same report.
"""

import numpy as np

from ordtopo import (
    FAIL,
    FiniteSpace,
    PASS,
    canonical_key,
    classify,
    random_poset,
    verify_theorems,
)

SEED = 7
COUNT = 25
MAX_N = 6

rng = np.random.default_rng(SEED)

seen = set()
passes = failures = skipped = 0
sober_count = t1_count = 0

for i in range(COUNT):
    n = int(rng.integers(1, MAX_N + 1))
    poset = random_poset(rng, n)
    seen.add(canonical_key(poset))
    space = FiniteSpace(poset)

    vec = classify(space).vector
    sober_count += vec.sober
    t1_count += vec.t1

    for report in verify_theorems(space):
        if report.verdict == PASS:
            passes += 1
        elif report.verdict == FAIL:
            failures += 1
            print(f"instance {i}: {report.theorem_id} FAILED: {report.witness}")
        else:
            skipped += 1

print(f"instances: {COUNT} ({len(seen)} distinct up to iso)")
print(f"sober: {sober_count}/{COUNT}  t1: {t1_count}/{COUNT}")
print(f"theorem checks: {passes} passed, {failures} failed, {skipped} not applicable")

# every finite T0 space is sober, so a failure here is a bug
assert failures == 0
assert sober_count == COUNT
