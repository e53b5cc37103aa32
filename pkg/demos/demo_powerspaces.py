"""
Smyth and Hoare power spaces over a three-point base
====================================================

The Smyth power space lives on the compact saturated sets under reverse
inclusion; the Hoare power space lives on nonempty closed sets under
inclusion.  On finite bases both are Alexandroff, so the upper and lower
Vietoris topologies are recovered exactly from those orders.
"""

from ordtopo import (
    FiniteSpace,
    bits_of,
    eta_map,
    hoare,
    named,
    open_filters_and_phi,
    smyth,
    union_map_check,
    xi_map,
)

lam = FiniteSpace(named("lambda"))


def show(mask):
    return "{" + ", ".join(str(i) for i in bits_of(mask)) + "}"


ps = smyth(lam)
print("Smyth carrier K(X), reverse inclusion:")
for i, k in enumerate(ps.carrier):
    print(f"  {i}: {show(k)}")

# xi embeds the base space: x -> up(x)
print("xi:", xi_map(lam, ps))

ph = hoare(lam)
print("Hoare carrier, nonempty closed sets under inclusion:")
for i, c in enumerate(ph.carrier):
    print(f"  {i}: {show(c)}")
print("eta:", eta_map(lam, ph))
print()

# the union map K(P_S(X)) -> K(X) is well defined and continuous
report = union_map_check(lam)
print("union map:", "ok" if report.ok else "FAILED", f"({report.mode},",
      f"{report.families_checked} families)")

# Hofmann-Mislove: Scott-open filters of O(X) correspond to K(X)
hm = open_filters_and_phi(lam)
print(
    f"Hofmann-Mislove: |OFilt| = {len(hm.ofilt)}, |K| = {len(hm.phi)},",
    "order isomorphism" if hm.order_iso and hm.is_bijection else "MISMATCH",
)
