"""Walk through the word-to-tree bijection on one input.

Start from a Smirnov word and a step sequence, insert one letter at a time,
and watch the weight stay put.
"""
from smirnov_trees.bijection import classify, f_weight, phi, psi, psi_inverse, wordsteps_weight
from smirnov_trees.checks import example_steps
from smirnov_trees.core import Tree, principal_data, to_text, tree_weight
from smirnov_trees.reference import EXAMPLE_WORD

w = EXAMPLE_WORD
steps = example_steps()
print("word :", "".join(map(str, w)))
print("steps:", [s if isinstance(s, str) else to_text(s) for s in steps])

# per-letter weights f(w_i, w_{i+1}, Y_i)
for i, s in enumerate(steps):
    edge, x = f_weight(w[i], w[i + 1], s)
    print(f"  f({w[i]},{w[i+1]}) -> {edge}   x-labels {x}")

# build the tree one insertion at a time, reading the word left to right
T = Tree(w[0], None, None)
for a, s in zip(w[1:], steps):
    case = classify(T, s, a)
    T = phi(T, s, a)
    print(f"insert {a} (case {case}): {to_text(T)}")

t = psi(w, steps)
assert t == T
print("\nfinal tree       :", to_text(t))
print("tree weight      :", tree_weight(t))
print("word-side weight :", wordsteps_weight(w, steps))
print("principal label  :", principal_data(t).a)
print("round trip ok    :", psi_inverse(t) == (w, steps))
