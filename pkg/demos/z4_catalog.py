"""Invariant subrings of Z_4[x] for a few small automorphism groups.

For each group the catalog case is read off the group structure and then
confirmed by comparing the fixed polynomials of degree <= 8 with the span
of the catalog generators.
"""

from ringauto import gz4
from ringauto.fixedrings import SubgroupSpec, identify_z4

A, B = gz4.GAut4.alpha, gz4.GAut4.beta
groups = {
    "<x + 2>": [A((2,))],
    "<-x + 1>": [B()],
    "<-x + 1 + 2x>": [B((0, 2))],
    "<x + 2, -x + 1>": [A((2,)), B()],
    "all of degree <= 3": gz4.pool(3),
}

for name, gens in groups.items():
    verdict = identify_z4(SubgroupSpec(tuple(g.to_endo() for g in gens)), 8)
    ring = ", ".join(str(p) for p in verdict.ring_generators)
    print(f"{name:<20} order {len(verdict.subgroup):>3}  {verdict.label():<16} Z_4[{ring}]")
