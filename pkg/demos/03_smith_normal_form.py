"""Exact Smith normal form with unimodular witnesses.

Run as: python3 demos/03_smith_normal_form.py
"""

from linkcolor import (
    IntMatrix,
    cokernel_descriptor,
    determinant,
    elementary_gcds,
    invariant_factors,
    kernel_count_mod,
    smith_normal_form,
)

M = IntMatrix.from_rows([
    [2, 4, 4],
    [-6, 6, 12],
    [10, 4, 16],
], 3)

print("== Input ==")
for row in M.entries:
    print("  " + " ".join(f"{v:4d}" for v in row))

print()
print("== Smith normal form ==")
res = smith_normal_form(M)
print(f"invariant factors (descending divisibility): {res.phi}")
print(f"rank: {res.rank}")
print("U1 M U2 equals the normal form:")
for row in (res.u1 @ M @ res.u2).entries:
    print("  " + " ".join(f"{v:4d}" for v in row))
print(f"det U1 = {determinant(res.u1)}, det U2 = {determinant(res.u2)}")

print()
print("== Minor gcd route ==")
deltas = elementary_gcds(M)
print(f"gcds of k-by-k minor families, delta_0..delta_{M.cols}: {deltas}")
ratios = tuple(0 if deltas[j] == 0 else deltas[j] // deltas[j + 1]
               for j in range(M.cols))
print(f"successive ratios (0/0 treated as 0): {ratios}")
assert ratios == res.phi

print()
print("== Cokernel and kernel counting ==")
print(f"cokernel: {cokernel_descriptor(M).describe()}")
for m in (2, 3, 5, 6):
    print(f"solutions of Mx = 0 over Z/{m}: {kernel_count_mod(M, m)}")

print()
print("== Zeros first ==")
wide = IntMatrix.from_rows([[1, 0, 0], [0, 1, 0]], 3)
print(f"a 2x3 identity-like matrix has factors {invariant_factors(wide)}:")
print("the free factor leads and everything divides it.")
