"""The insertion map ``phi(T, S, b)`` on Smirnov trees, its inverse, and the
iterated bijection ``psi`` from (Smirnov word, step sequence) pairs to
Smirnov trees.

A step is ``"D"``, ``"U"`` or a Smirnov :class:`~smirnov_trees.core.Tree`.
The fifteen insertion cases are tagged ``1a``..``5b``:

* family 1: ``b`` becomes the right child of the principal node;
* family 2: ``b`` becomes a new root;
* family 3: ``b`` is spliced in as the right child of ``delta``;
* family 4: ``b`` is spliced in as the left child of ``delta``;
* family 5: ``delta``'s subtrees are swapped and ``b`` becomes its right child.

``delta`` is the last principal-path node with label ``>= b`` (when
``a < b``) or ``<= b`` (when ``a > b``), where ``a`` is the principal label.
Whenever ``S`` is a tree and the case is not 1b/1c, ``S`` is grafted as the
right subtree of the old principal node.
"""
from __future__ import annotations

from typing import NamedTuple

from .algebra import ONE, RA, RD, LA, LD
from .core import (
    Tree,
    TreeWeight,
    is_smirnov_tree,
    is_smirnov_word,
    principal_data,
    principal_dirs,
    replace,
    size,
    subtree,
    to_json,
    from_json,
    tree_weight,
)

D, U = "D", "U"
CASES = ("1a", "1b", "1c", "2a", "2b", "2c", "2d", "3a", "3b", "3c", "3d",
         "4a", "4b", "5a", "5b")


class Triple(NamedTuple):
    T: Tree
    S: object
    b: int


class WordSteps(NamedTuple):
    w: tuple
    steps: tuple


def _check_step(S):
    if S in (D, U):
        return
    if not isinstance(S, Tree) or not is_smirnov_tree(S):
        raise ValueError(f"step must be 'D', 'U' or a Smirnov tree, got {S!r}")


def check_triple(T, S, b):
    _check_step(S)
    pd = principal_data(T)  # rejects non-Smirnov T
    if not isinstance(b, int) or b < 1:
        raise ValueError(f"b must be a positive integer, got {b!r}")
    if b == pd.a:
        raise ValueError(f"b = {b} equals the principal label of T")
    return pd


def f_weight(a, b, Y):
    """Edge weight and x-part contributed by one (a -> b, Y) transition."""
    if a == b:
        raise ValueError("f is defined only for distinct labels")
    _check_step(Y)
    up = a < b
    if Y == D:
        return TreeWeight(RA if up else RD, ())
    if Y == U:
        return TreeWeight(LA if up else LD, ())
    tw = tree_weight(Y)
    return TreeWeight((RA * LA if up else RD * LD) * tw.edge, tw.x)


def triple_weight(T, S, b):
    pd = check_triple(T, S, b)
    return tree_weight(T) * TreeWeight(ONE, (b,)) * f_weight(pd.a, b, S)


def _analyze(T, S, b):
    """Return (case, principal data, index of delta on the path or None)."""
    pd = check_triple(T, S, b)
    a, M, m = pd.a, pd.M, pd.m
    labs = pd.labels
    up = a < b
    if up:
        hits = [i for i, x in enumerate(labs) if x >= b]
    else:
        hits = [i for i, x in enumerate(labs) if x <= b]
    di = hits[-1] if hits else None
    d = labs[di] if hits else None

    if S == D:
        return "1a", pd, di
    if isinstance(S, Tree):
        c = S.label
        if up and c < b:
            return "1b", pd, di
        if not up and c > b:
            return "1c", pd, di
    tree = isinstance(S, Tree)
    if up:
        if M < b:
            return ("2c" if tree else "2a"), pd, di
        if d > b:
            return ("3c" if tree else "3a"), pd, di
        return ("4b" if tree else "4a"), pd, di
    if m > b:
        return ("2d" if tree else "2b"), pd, di
    if d < b:
        return ("3d" if tree else "3b"), pd, di
    return ("5b" if tree else "5a"), pd, di


def classify(T, S, b):
    return _analyze(T, S, b)[0]


def phi(T, S, b):
    """Insert label ``b`` with step ``S`` into the Smirnov tree ``T``."""
    case, pd, di = _analyze(T, S, b)
    alpha = pd.dirs
    fam = case[0]
    if fam == "1":
        beta = Tree(b, S if isinstance(S, Tree) else None, None)
        return replace(T, alpha + ("R",), beta)
    if isinstance(S, Tree):
        T = replace(T, alpha + ("R",), S)
    if fam == "2":
        return Tree(b, T, None)
    ddirs = alpha[:di]
    delta = subtree(T, ddirs)
    if fam == "3":
        return replace(T, ddirs + ("R",), Tree(b, delta.right, None))
    if fam == "4":
        return replace(T, ddirs + ("L",), Tree(b, delta.left, None))
    return replace(T, ddirs, Tree(delta.label, delta.right, Tree(b, delta.left, None)))


def _first_crossing(t, pred):
    """Moves to the first node on ``t``'s principal path whose label satisfies
    ``pred``, or None."""
    dirs, path = principal_dirs(t)
    for i, node in enumerate(path):
        if pred(node.label):
            return dirs[:i]
    return None


def _cut(t, gdirs, b):
    return Triple(replace(t, gdirs, None), subtree(t, gdirs), b)


def phi_inverse(T2):
    """The unique triple ``(T, S, b)`` with ``phi(T, S, b) == T2``."""
    pd = principal_data(T2)
    if size(T2) < 2:
        raise ValueError("phi_inverse needs a tree with at least 2 nodes")
    beta, b, dirs = pd.node, pd.a, pd.dirs
    ge = lambda x: x >= b  # noqa: E731
    le = lambda x: x <= b  # noqa: E731

    if not dirs:
        # beta is the root: families 2a-2d
        L = beta.left
        g = _first_crossing(L, ge if L.label < b else le)
        if g is None:
            return Triple(L, U, b)
        return _cut(L, g, b)

    pdirs = dirs[:-1]
    parent = pd.path[-2]
    if dirs[-1] == "L":
        # 4a/4b: parent has label b and a smaller right child
        T0 = replace(T2, pdirs + ("L",), beta.left)
        g = _first_crossing(parent.right, ge)
        if g is None:
            return Triple(T0, U, b)
        return _cut(T0, pdirs + ("R",) + g, b)

    if parent.label == b:
        # 5a/5b: parent's left subtree came from its old right subtree
        T0 = replace(T2, pdirs, Tree(b, beta.left, parent.left))
        g = _first_crossing(parent.left, le)
        if g is None:
            return Triple(T0, U, b)
        return _cut(T0, pdirs + ("R",) + g, b)

    if beta.left is None:
        return Triple(replace(T2, dirs, None), D, b)
    p, l = parent.label, beta.left.label
    if (p < b and l < b) or (p > b and l > b):
        return Triple(replace(T2, dirs, None), beta.left, b)
    T0 = replace(T2, dirs, beta.left)
    g = _first_crossing(beta.left, ge if p > b else le)
    if g is None:
        return Triple(T0, U, b)
    return _cut(T0, dirs + g, b)


def check_wordsteps(w, steps):
    w, steps = tuple(w), tuple(steps)
    if not w or any(not isinstance(x, int) or x < 1 for x in w):
        raise ValueError(f"word must be a nonempty sequence of positive integers: {w!r}")
    if not is_smirnov_word(w):
        raise ValueError(f"not a Smirnov word: {w!r}")
    if len(steps) != len(w) - 1:
        raise ValueError("need exactly len(w) - 1 steps")
    for S in steps:
        _check_step(S)
    return WordSteps(w, steps)


def psi(w, steps):
    w, steps = check_wordsteps(w, steps)
    t = Tree(w[0])
    for i in range(1, len(w)):
        t = phi(t, steps[i - 1], w[i])
    return t


def psi_inverse(t):
    principal_data(t)  # rejects non-Smirnov input
    w, steps = [], []
    while size(t) > 1:
        t, S, b = phi_inverse(t)
        w.append(b)
        steps.append(S)
    w.append(t.label)
    return WordSteps(tuple(reversed(w)), tuple(reversed(steps)))


def wordsteps_weight(w, steps):
    w, steps = check_wordsteps(w, steps)
    total = TreeWeight(ONE, tuple(sorted(w)))
    for i, S in enumerate(steps):
        total = total * f_weight(w[i], w[i + 1], S)
    return total


def wordsteps_size(w, steps):
    return len(w) + sum(size(S) for S in steps if isinstance(S, Tree))


# -- JSON ------------------------------------------------------------------

def step_to_json(S):
    return S if S in (D, U) else to_json(S)


def step_from_json(data):
    if data in (D, U):
        return data
    return from_json(data)


def triple_to_json(tr):
    T, S, b = tr
    return {"T": to_json(T), "S": step_to_json(S), "b": b}


def triple_from_json(data):
    try:
        return Triple(from_json(data["T"]), step_from_json(data["S"]), data["b"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed triple JSON: {exc}") from exc


def wordsteps_to_json(ws):
    return {"w": list(ws[0]), "steps": [step_to_json(S) for S in ws[1]]}


def wordsteps_from_json(data):
    try:
        return WordSteps(tuple(data["w"]), tuple(step_from_json(S) for S in data["steps"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed word/steps JSON: {exc}") from exc


def weight_to_json(tw):
    return {"edge": tw.edge.to_json(), "x": list(tw.x), "text": str(tw)}


__all__ = [
    "CASES", "D", "U", "Triple", "WordSteps", "classify", "f_weight",
    "phi", "phi_inverse", "psi", "psi_inverse", "triple_weight", "wordsteps_weight",
]
