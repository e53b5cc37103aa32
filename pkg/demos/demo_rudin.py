"""
Rudin machinery: M, m, and the minimizer
========================================
"""

import numpy as np

from ordtopo import (
    FiniteSpace,
    M_and_m,
    bits_of,
    enumerate_families,
    named,
    random_poset,
    rudin_family,
    topological_rudin_minimize,
    wd_family,
)

lam = FiniteSpace(named("lambda"))  # bottom 0 under incomparable 1 and 2


def show(mask):
    return "{" + ", ".join(str(i) for i in bits_of(mask)) + "}"


# the family {up(1), {1, 2}} is filtered; which closed sets meet both?
family = [0b010, 0b110]
big, small = M_and_m(lam, family)
print("family  ", [show(k) for k in family])
print("M       ", [show(c) for c in big])
print("m       ", [show(c) for c in small])

# the minimizer walks any closed set of M down to a minimal member of m,
# and the topological Rudin lemma says the result is always irreducible
a = topological_rudin_minimize(lam, family, 0b111)
print("minimize", show(0b111), "->", show(a))
print()

# the inclusion chain Dc <= RD <= WD <= IrrC, here on random instances;
# on finite spaces all four collapse to the point closures
rng = np.random.default_rng(0)
for _ in range(5):
    poset = random_poset(rng, 6)
    space = FiniteSpace(poset)
    fams = enumerate_families(space)
    dc = set(fams.dc)
    rd = set(rudin_family(space))
    wd = set(wd_family(space))
    irr = set(fams.irr_c)
    assert dc <= rd <= wd <= irr
    print(
        f"n={poset.n}  |Dc|={len(dc)}  |RD|={len(rd)}  "
        f"|WD|={len(wd)}  |IrrC|={len(irr)}  chain holds"
    )
