"""Conjugacy classes of the affine group x -> ux + a over Z_9.

Prints the class table, then cross-checks the class count against a
brute-force orbit computation for every modulus up to 30.
"""

from ringauto import basicgroup as bg

n = 9
print(f"B(Z_{n}) has {bg.group_order(n)} elements")
for c in bg.enumerate_classes(n):
    rep = c.rep
    print(f"  {rep.u}x + {bg.display_a(rep):<2}  size {c.size}")

print()
print(" n  psi(n)  brute force")
for m in range(2, 31):
    print(f"{m:>2}  {bg.psi(m):>6}  {bg.psi_bruteforce(m):>11}")
