"""Automorphisms of Z_8[x] whose inverse has a larger degree.

x -> x + 2x^3 is an automorphism, yet no polynomial of degree at most 4
undoes it: the inverse has degree 5.  A bounded brute-force search with
too small a cap therefore misses it.
"""

from ringauto import Endo, Poly, classify, compose_endo, invert
from ringauto.endos import is_automorphism_bruteforce

s = Endo(Poly((0, 1, 0, 2), 8))
form = classify(s)
t = invert(s)
print(f"sigma(x)     = {s.image}")
print(f"Gilmer form  : a={form.a.value}, u={form.u.value}, f={form.f}")
print(f"inverse(x)   = {t.image}")
print(f"sigma o tau  = {compose_endo(s, t).image}")
for cap in (3, 4, 5):
    print(f"brute force with inverse degree cap {cap}: {is_automorphism_bruteforce(s, cap)}")
