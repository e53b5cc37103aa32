"""
Classifying small spaces and the cofinite space
===============================================

Every finite T0 space is the Alexandroff space of its specialization
poset, and finite T0 spaces are sober, so most of the sixteen flags come
out true.  The cofinite space is the interesting counterpoint: T1 and
locally compact but neither sober nor well-filtered.
"""

from ordtopo import CofiniteSpace, FiniteSpace, FLAGS, classify, named

# the named instances: a chain, the three-point spaces, a diamond
for name in ["chain2", "antichain2", "lambda", "vee", "diamond"]:
    c = classify(FiniteSpace(named(name)))
    flags = c.vector.as_dict()
    true_flags = [f for f in FLAGS if flags[f]]
    print(f"{name:12s} true: {', '.join(true_flags)}")
    for flag, witness in c.witnesses.items():
        print(f"{'':12s} {flag} fails: {witness}")

print()

# the cofinite space: closed sets are the finite sets plus the whole space
c = classify(CofiniteSpace())
print("cofinite space")
for flag, value in c.vector.as_dict().items():
    marker = "" if value else "   <- with witness" if flag in c.witnesses else ""
    print(f"  {flag:22s} {value}{marker}")

# the failure of well-filteredness is witnessed by the family of all
# cofinite subsets: its intersection is empty (inside any open), yet no
# single member is inside the empty set
print()
print("well_filtered witness:", c.witnesses["well_filtered"])
