"""The generating function G in the elementary basis, three ways.

Brute-force tree enumeration, the bleeding-tree sum and the fixed point
of the functional equation all give the same coefficients.
"""
from smirnov_trees.algebra import partitions_of
from smirnov_trees.bleeding import (e_coefficient, enumerate_bleeding, g_fixed_point,
                                    g_truncated, to_text)

N = 4
direct = g_truncated(N)
print("enumeration == fixed point:", direct == g_fixed_point(N))

for n in range(1, N + 1):
    for pi in partitions_of(n):
        c = e_coefficient(pi)
        assert c == direct.coefficient(pi)
        print(f"c{pi} = {c}")

trees = enumerate_bleeding((3, 2, 1))
print(f"\n{len(trees)} bleeding trees for (3,2,1), e.g.")
for U in trees[:4]:
    print("  ", to_text(U))
c = e_coefficient((3, 2, 1))
print(f"c(3,2,1) has {len(c)} terms, all coefficients >= 0: {c.is_nonnegative()}")
