"""Ascent/descent refinement of the Smirnov word sum, checked against brute force."""
from smirnov_trees.specializations import word_sum
from smirnov_trees.symfunc import sw_formula

for n in range(1, 5):
    f = sw_formula(n)
    print(f"n={n}: formula matches words: {f == word_sum(n)}")
    for pi, c in sorted(f.items()):
        print(f"   e{pi}: {c}")
