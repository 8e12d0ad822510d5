"""Character tables of the S_n-modules behind G, for n = 3, 4, 5.

Rows are orbits of monomials under the left/right and ascent/descent
symmetries; columns are cycle types starting from the identity.
"""
from smirnov_trees.specializations import table_csv

for n in (3, 4, 5):
    print(f"n = {n}")
    print(table_csv(n))
