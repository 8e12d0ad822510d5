"""Standard trees, the exponential specialization, and two counting checks."""
from math import factorial

from smirnov_trees.specializations import (b_series, catalan, check_counting_identities,
                                           check_gessel_equation)

B = b_series(4)
for n in range(1, 5):
    print(f"B_{n} = {B[n]}")

print("\nmultiplicative equation holds to degree 5:", check_gessel_equation(5)["ok"])

rows = check_counting_identities(6)["rows"]
print("\n n   all-ones   n!Cat_n   ld=0   (n+1)^(n-1)")
for r in rows:
    n = r["n"]
    print(f"{n:2d} {r['all_ones']:9d} {factorial(n) * catalan(n):9d} "
          f"{r['ld_zero']:6d} {(n + 1) ** (n - 1):8d}")
