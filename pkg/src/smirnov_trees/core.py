"""Smirnov words, labeled plane binary trees and their statistics.

Trees are immutable :class:`Tree` tuples ``(label, left, right)`` with
``None`` for an absent child.  x-monomials are sorted tuples of labels, so
``x1^2 x3`` is ``(1, 1, 3)``.

Edge weights follow the convention fixed by the worked 13-node example:

* parent ``a`` with right child ``b``: ``ra`` if ``a <= b`` else ``rd``;
* left child ``a`` with parent ``b``: ``la`` if ``a <= b`` else ``ld``.
"""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import permutations, product
from typing import NamedTuple, Optional

from .algebra import WeightPoly

RA_I, RD_I, LA_I, LD_I = range(4)


class Tree(NamedTuple):
    label: int
    left: Optional["Tree"] = None
    right: Optional["Tree"] = None

    def __str__(self):
        return to_text(self)


class TreeWeight(NamedTuple):
    """Edge monomial times x-monomial."""

    edge: WeightPoly
    x: tuple

    def __mul__(self, other):
        return TreeWeight(self.edge * other.edge, xmul(self.x, other.x))

    def __str__(self):
        return f"{self.edge} * {xmono_str(self.x)}"


class PrincipalData(NamedTuple):
    path: tuple          # nodes from the root to the principal node
    dirs: tuple          # "L"/"R" moves taken along the path
    a: int
    M: int
    m: int

    @property
    def labels(self):
        return tuple(n.label for n in self.path)

    @property
    def node(self):
        return self.path[-1]


# -- x-monomials -----------------------------------------------------------

def xmono(labels):
    return tuple(sorted(labels))


def xmul(x, y):
    return tuple(sorted(x + y))


def xmono_str(x):
    if not x:
        return "1"
    parts = []
    for lab in sorted(set(x)):
        k = x.count(lab)
        parts.append(f"x{lab}" if k == 1 else f"x{lab}^{k}")
    return "*".join(parts)


# -- words -----------------------------------------------------------------

def is_smirnov_word(w):
    return all(w[i] != w[i + 1] for i in range(len(w) - 1))


def word_stats(w):
    """(asc, des) with ``des = #{i : w_i > w_{i+1}}``; ascents are weak."""
    des = sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])
    return len(w) - 1 - des, des


def enumerate_smirnov_words(n, k):
    """Smirnov words of length ``n`` over ``[k]`` in lexicographic order."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")

    def extend(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(1, k + 1):
            if not prefix or prefix[-1] != c:
                prefix.append(c)
                yield from extend(prefix)
                prefix.pop()

    return extend([])


# -- trees -----------------------------------------------------------------

def nodes(t):
    """Preorder node iterator."""
    stack = [t]
    while stack:
        node = stack.pop()
        if node is None:
            continue
        yield node
        stack.append(node.right)
        stack.append(node.left)


def size(t):
    if t is None:
        return 0
    return 1 + size(t.left) + size(t.right)


def labels(t):
    return [n.label for n in nodes(t)]


def is_smirnov_tree(t):
    for node in nodes(t):
        if node.label < 1:
            return False
        l, r = node.left, node.right
        if l is not None and l.label == node.label:
            if r is None or r.label >= node.label:
                return False
        if r is not None and r.label == node.label:
            if l is None or l.label <= node.label:
                return False
    return True


def tree_stats(t):
    """(rasc, rdes, lasc, ldes) of a labeled binary tree."""
    st = [0, 0, 0, 0]
    for node in nodes(t):
        if node.right is not None:
            st[RA_I if node.label <= node.right.label else RD_I] += 1
        if node.left is not None:
            st[LA_I if node.left.label <= node.label else LD_I] += 1
    return tuple(st)


def tree_weight(t):
    return TreeWeight(WeightPoly.monomial(tree_stats(t)), xmono(labels(t)))


def principal_data(t):
    if not is_smirnov_tree(t):
        raise ValueError(f"not a Smirnov tree: {to_text(t)}")
    path, dirs = [t], []
    node = t
    while node.right is not None:
        if node.left is not None and node.left.label == node.label:
            node = node.left
            dirs.append("L")
        else:
            node = node.right
            dirs.append("R")
        path.append(node)
    labs = [n.label for n in path]
    return PrincipalData(tuple(path), tuple(dirs), labs[-1], max(labs), min(labs))


def principal_dirs(t):
    """Principal path moves without the Smirnov check (used on subtrees)."""
    dirs, path = [], [t]
    node = t
    while node.right is not None:
        if node.left is not None and node.left.label == node.label:
            node = node.left
            dirs.append("L")
        else:
            node = node.right
            dirs.append("R")
        path.append(node)
    return tuple(dirs), path


def subtree(t, dirs):
    for d in dirs:
        t = t.left if d == "L" else t.right
    return t


def replace(t, dirs, new):
    """Copy of ``t`` with the subtree at ``dirs`` replaced by ``new``."""
    if not dirs:
        return new
    d, rest = dirs[0], dirs[1:]
    if d == "L":
        return t._replace(left=replace(t.left, rest, new))
    return t._replace(right=replace(t.right, rest, new))


# -- enumeration -----------------------------------------------------------

@lru_cache(maxsize=None)
def shapes(n):
    """Unlabeled binary tree shapes on ``n`` nodes; a shape is ``(left, right)``
    with ``None`` for the empty shape.  Ordered by left size, then recursively."""
    if n == 0:
        return (None,)
    out = []
    for i in range(n):
        for ls in shapes(i):
            for rs in shapes(n - 1 - i):
                out.append((ls, rs))
    return tuple(out)


def label_shape(shape, labs):
    """Fill ``shape`` with labels in preorder."""
    it = iter(labs)

    def build(s):
        if s is None:
            return None
        lab = next(it)
        left = build(s[0])
        return Tree(lab, left, build(s[1]))

    return build(shape)


def enumerate_labeled_trees(n, k):
    """Every labeled binary tree on ``n`` nodes with labels in ``[k]``."""
    for shape in shapes(n):
        for labs in product(range(1, k + 1), repeat=n):
            yield label_shape(shape, labs)


@lru_cache(maxsize=None)
def _smirnov_fillings(shape, k):
    if shape is None:
        return (None,)
    lefts = _smirnov_fillings(shape[0], k)
    rights = _smirnov_fillings(shape[1], k)
    out = []
    for lab in range(1, k + 1):
        for l in lefts:
            for r in rights:
                if l is not None and l.label == lab and (r is None or r.label >= lab):
                    continue
                if r is not None and r.label == lab and (l is None or l.label <= lab):
                    continue
                out.append(Tree(lab, l, r))
    return tuple(out)


def enumerate_smirnov_trees(n, k):
    """Smirnov trees with ``n`` nodes and labels in ``[k]``.

    Order: shape-major (the order of :func:`shapes`), then labels in
    lexicographic order of the preorder label sequence.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    for shape in shapes(n):
        yield from _smirnov_fillings(shape, k)


def enumerate_standard_trees(n):
    """Binary trees on ``n`` nodes labeled by a permutation of ``[n]``."""
    if n < 1:
        raise ValueError("need n >= 1")
    for shape in shapes(n):
        for perm in permutations(range(1, n + 1)):
            yield label_shape(shape, perm)


# -- serialization ---------------------------------------------------------

def to_json(t):
    if t is None:
        return None
    return {"label": t.label, "left": to_json(t.left), "right": to_json(t.right)}


def from_json(data):
    if data is None:
        return None
    if not isinstance(data, dict) or set(data) - {"label", "left", "right"}:
        raise ValueError(f"malformed tree JSON: {data!r}")
    lab = data["label"]
    if not isinstance(lab, int) or isinstance(lab, bool) or lab < 1:
        raise ValueError(f"tree labels must be positive integers, got {lab!r}")
    return Tree(lab, from_json(data.get("left")), from_json(data.get("right")))


def to_text(t):
    if t is None:
        return "_"
    return f"{t.label}({to_text(t.left)},{to_text(t.right)})"


_TOKEN = re.compile(r"\d+|[(),_]")


def parse_tree(text):
    """Parse the compact form ``label(left,right)``; a bare label is a leaf."""
    tokens = _TOKEN.findall(text.replace(" ", ""))
    if "".join(tokens) != text.replace(" ", ""):
        raise ValueError(f"bad tree text {text!r}")
    pos = 0

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of tree text {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r} at token {pos} of {text!r}")
        pos += 1
        return tok

    def node():
        tok = take()
        if tok == "_":
            return None
        if not tok.isdigit():
            raise ValueError(f"expected a label in {text!r}")
        if pos < len(tokens) and tokens[pos] == "(":
            take("(")
            left = node()
            take(",")
            right = node()
            take(")")
            return Tree(int(tok), left, right)
        return Tree(int(tok))

    t = node()
    if pos != len(tokens) or t is None:
        raise ValueError(f"bad tree text {text!r}")
    return t
