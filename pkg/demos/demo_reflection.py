"""
Well-filtered reflection and its universal property
===================================================

X^w is the Hoare-style space on the WD sets of X.  Finite spaces are
already well-filtered, so the reflection is a homeomorphic copy; the
cofinite space is not, and its reflection adds exactly one point.
"""

from ordtopo import (
    CofiniteSpace,
    FiniteSpace,
    chain,
    continuous_maps,
    factorize,
    named,
    wf_reflection,
)

lam = FiniteSpace(named("lambda"))

refl = wf_reflection(lam)
print("X = lambda, X^w carrier size:", len(refl.reflected.carrier))
print("eta:", refl.eta)
print("homeomorphic to X:", refl.homeo_to_original, "via", refl.iso)
print()

# universal property: every continuous map into a well-filtered space
# factors uniquely through eta.  The two-point chain admits 5 maps from
# the three-point base, and each factors on the nose.
two = FiniteSpace(chain(2))
for f in continuous_maps(lam, two):
    report = factorize(lam, two, f, reflection=refl)
    print(
        f"f = {f}  f* = {report.f_star}  commutes = {report.commutes}  "
        f"unique = {report.unique} ({report.uniqueness_mode})"
    )
print()

# the cofinite space: the reflection is described, not enumerated
cof = wf_reflection(CofiniteSpace())
print("cofinite reflection:", cof.carrier_description)
print("added points:", cof.added_points, "- a top:", cof.new_point_is_top)
print("coincides with the sobrification:", cof.matches_sobrification)
print("compact on both sides:", cof.compact_both)
