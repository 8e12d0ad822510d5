"""Bleeding trees and the e-expansion of the Smirnov-tree generating function G.

A bleeding tree alternates red (unlabeled) and black (labeled) levels and
starts with a red root.  Each red node has one child on a red edge and any
number of children on black edges.  Trees are unordered; we store them in
canonical form, with every child list sorted, so equality is isomorphism.

Three routes to G are provided and cross-checked by the tests:

* :func:`g_truncated` enumerates Smirnov trees directly;
* :func:`e_coefficient` sums weighted bleeding trees;
* :func:`g_fixed_point` iterates the word-substitution equation in the E
  basis, and :func:`g_from_words` does the same on explicit monomials.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import NamedTuple

from .algebra import ONE, RA, RD, LA, LD, ZERO, partitions_of, sort_partition
from .core import enumerate_smirnov_trees, enumerate_smirnov_words, tree_weight, word_stats
from .symfunc import (
    DEFAULT_MAX_DEGREE,
    SymFunc,
    from_monomial_data,
    sw_formula,
    xpoly_add,
    xpoly_mul,
)

UP2, UP1 = RA * LA, RA + LA
DN2, DN1 = RD * LD, RD + LD


class BlackNode(NamedTuple):
    label: int
    children: tuple = ()     # RedNode values, sorted


class RedNode(NamedTuple):
    red: BlackNode           # the child on the red edge
    others: tuple = ()       # BlackNode values on black edges, sorted


# -- node weights ----------------------------------------------------------

def _binom(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def _node_sum(i_range, r_top, k):
    total = ZERO
    for i in i_range:
        for j in range(i + 1):
            c = _binom(i, j) * _binom(r_top - i, r_top - k - j)
            if not c:
                continue
            e_dn2, e_dn1 = k - i + j, r_top - k - j
            if e_dn2 < 0 or e_dn1 < 0:
                continue
            total = total + c * UP2 ** (i - j) * UP1 ** j * DN2 ** e_dn2 * DN1 ** e_dn1
    return total


@lru_cache(maxsize=None)
def p_weight(r, k):
    """Weight of a black node with label ``r``, ``k`` children, black parent edge."""
    if r < 1 or k < 0:
        raise ValueError("need r >= 1 and k >= 0")
    return _node_sum(range(1, r), r, k)


@lru_cache(maxsize=None)
def pbar_weight(r, k):
    """Weight of a black node with label ``r``, ``k`` children, red parent edge."""
    if r < 1 or k < 0:
        raise ValueError("need r >= 1 and k >= 0")
    return _node_sum(range(r), r - 1, k)


# -- enumeration -----------------------------------------------------------

def _submultisets(ms):
    """All sub-multisets of a sorted tuple, as (chosen, rest) pairs."""
    values = sorted(set(ms))
    counts = [ms.count(v) for v in values]
    for pick in product(*(range(c + 1) for c in counts)):
        chosen = tuple(v for v, p in zip(values, pick) for _ in range(p))
        rest = tuple(v for v, p, c in zip(values, pick, counts) for _ in range(c - p))
        yield chosen, rest


def _forests(ms, make):
    """Unordered collections of trees (built by ``make``) whose label
    multisets partition ``ms``.  Returns a set of sorted tuples."""
    if not ms:
        return {()}
    first, rest = ms[0], ms[1:]
    out = set()
    for extra, remaining in _submultisets(rest):
        block = tuple(sorted((first,) + extra))
        for t in make(block):
            for f in _forests(remaining, make):
                out.add(tuple(sorted((t,) + f)))
    return out


@lru_cache(maxsize=None)
def _red_trees(ms):
    out = set()
    for r in sorted(set(ms)):
        i = ms.index(r)
        rest = ms[:i] + ms[i + 1:]
        for below, beside in _submultisets(rest):
            for red in _black_trees(r, True, below):
                for others in _black_forest(beside):
                    out.add(RedNode(red, others))
    return frozenset(out)


@lru_cache(maxsize=None)
def _black_trees(r, red_edge, below):
    out = set()
    for children in _forests(below, _red_trees):
        k = len(children)
        if red_edge and k >= r:
            continue
        if not red_edge and (k > r or r == 1):
            continue
        out.add(BlackNode(r, children))
    return frozenset(out)


def _black_subtrees(block):
    """Black-edge subtrees using exactly the labels in ``block``; any of
    them may sit at the subtree root."""
    out = set()
    for r in sorted(set(block)):
        i = block.index(r)
        out |= _black_trees(r, False, block[:i] + block[i + 1:])
    return out


@lru_cache(maxsize=None)
def _black_forest(ms):
    return frozenset(_forests(ms, _black_subtrees))


def enumerate_bleeding(pi):
    """Bleeding trees whose black labels are exactly the parts of ``pi``,
    each isomorphism class once, in sorted canonical order."""
    pi = sort_partition(pi)
    if not pi or any(p < 1 for p in pi):
        raise ValueError("need a nonempty partition of positive parts")
    return sorted(_red_trees(tuple(sorted(pi))))


# -- weights ---------------------------------------------------------------

def _arrangements(items):
    """Distinct orderings of a multiset of canonical subtrees."""
    counts = {}
    for it in items:
        counts[it] = counts.get(it, 0) + 1
    n = factorial(len(items))
    for c in counts.values():
        n //= factorial(c)
    return n


def drawing_multiplicity(U):
    """Plane drawings of ``U`` with each red-edge child drawn first."""
    if isinstance(U, RedNode):
        m = _arrangements(U.others) * drawing_multiplicity(U.red)
        for b in U.others:
            m *= drawing_multiplicity(b)
        return m
    m = _arrangements(U.children)
    for c in U.children:
        m *= drawing_multiplicity(c)
    return m


def black_nodes(U, red_edge=True):
    """Yield ``(label, child count, on_red_edge)`` for every black node."""
    if isinstance(U, RedNode):
        yield from black_nodes(U.red, True)
        for b in U.others:
            yield from black_nodes(b, False)
        return
    yield U.label, len(U.children), red_edge
    for c in U.children:
        yield from black_nodes(c)


def weight_factors(U):
    """Sorted list of ``(barred, r, k)`` node-weight factors of ``U``."""
    return sorted((on_red, r, k) for r, k, on_red in black_nodes(U))


def bleeding_weight(U):
    w = ONE * drawing_multiplicity(U)
    for r, k, on_red in black_nodes(U):
        w = w * (pbar_weight(r, k) if on_red else p_weight(r, k))
    return w


def e_coefficient(pi):
    """``[e_pi] G`` as a sum over bleeding trees."""
    total = ZERO
    for U in enumerate_bleeding(pi):
        total = total + bleeding_weight(U)
    return total


def g_bleeding(N, max_degree=None):
    """Degree <= N part of G in the E basis via bleeding trees."""
    out = {}
    for n in range(1, N + 1):
        for pi in partitions_of(n):
            out[pi] = e_coefficient(pi)
    return SymFunc("e", out, max_degree or max(N, DEFAULT_MAX_DEGREE))


def to_text(U):
    """Debug text: black ``r[...]``, red ``R<red-child; others>``."""
    if isinstance(U, RedNode):
        rest = "".join("," + to_text(b) for b in U.others)
        return f"R<{to_text(U.red)}{rest}>"
    if not U.children:
        return str(U.label)
    return f"{U.label}[" + ",".join(to_text(c) for c in U.children) + "]"


def to_json(U):
    if isinstance(U, RedNode):
        return {"red": to_json(U.red), "black": [to_json(b) for b in U.others]}
    return {"label": U.label, "children": [to_json(c) for c in U.children]}


def red(red_child, *others):
    """Build a canonical red node."""
    return RedNode(red_child, tuple(sorted(others)))


def black(label, *children):
    """Build a canonical black node."""
    return BlackNode(label, tuple(sorted(children)))


# -- G by direct enumeration -----------------------------------------------

def tree_monomial_data(n, k):
    """x-monomial -> summed edge weight over Smirnov trees with ``n`` nodes
    and labels in ``[k]``."""
    data = {}
    for t in enumerate_smirnov_trees(n, k):
        tw = tree_weight(t)
        data[tw.x] = data[tw.x] + tw.edge if tw.x in data else tw.edge
    return data


def g_truncated(N, max_degree=None):
    """Degree <= N part of G in the E basis from Smirnov-tree enumeration;
    degree ``n`` uses labels ``1..n``.  Raises if any slice is not symmetric."""
    total = SymFunc("e", {}, max_degree or max(N, DEFAULT_MAX_DEGREE))
    for n in range(1, N + 1):
        total = total + from_monomial_data(n, tree_monomial_data(n, n), total.max_degree).convert("e")
    return total


def g_enumerated(N, k):
    """Monomial map of G restricted to labels ``[k]`` and degree <= N."""
    out = {}
    for n in range(1, N + 1):
        out.update(tree_monomial_data(n, k))
    return out


def g_from_words(N, k):
    """Monomial map of the word-substitution side of the functional
    equation, in labels ``[k]`` up to degree ``N``.

    G appears on both sides; since every letter carries x-degree one, the
    degree-``d`` part of the right side depends only on lower degrees of G,
    so ``N`` rounds of substitution reach the fixed point.
    """
    words = {}
    for n in range(1, N + 1):
        for w in enumerate_smirnov_words(n, k):
            key = word_stats(w)
            x = tuple(sorted(w))
            bucket = words.setdefault(key, {})
            bucket[x] = bucket.get(x, 0) + 1
    g = {}
    for _ in range(N):
        s = xpoly_add({(): UP1}, xpoly_mul({(): UP2}, g, N))
        t = xpoly_add({(): DN1}, xpoly_mul({(): DN2}, g, N))
        spow, tpow = [{(): ONE}], [{(): ONE}]
        new = {}
        for (a, d), xs in sorted(words.items()):
            while len(spow) <= a:
                spow.append(xpoly_mul(spow[-1], s, N))
            while len(tpow) <= d:
                tpow.append(xpoly_mul(tpow[-1], t, N))
            new = xpoly_add(new, xpoly_mul(xpoly_mul(spow[a], tpow[d], N), xs, N))
        g = new
    return g


def g_fixed_point(N, max_degree=None):
    """G to degree ``N`` in the E basis from the substitution
    ``s <- ra*la*G + ra + la``, ``t <- rd*ld*G + rd + ld`` into the
    ascent/descent word formula, iterated to its fixed point."""
    deg = max_degree or max(N, DEFAULT_MAX_DEGREE)
    formulas = [sw_formula(n, deg) for n in range(1, N + 1)]
    one = SymFunc.scalar(1, "e", N)
    g = SymFunc("e", {}, N)
    for _ in range(N):
        s = g * UP2 + UP1
        t = g * DN2 + DN1
        new = SymFunc("e", {}, N)
        for f in formulas:
            for pi, c in f.coeffs.items():
                new = new + c.subs(s, t, one) * SymFunc.e(*pi, max_degree=N)
        g = new
    return SymFunc("e", g.coeffs, deg)


def sw_substituted(n, s, t, max_degree):
    """One summand of the fixed-point map, exposed for the tests."""
    one = SymFunc.scalar(1, "e", max_degree)
    out = SymFunc("e", {}, max_degree)
    for pi, c in sw_formula(n, max_degree).coeffs.items():
        out = out + c.subs(s, t, one) * SymFunc.e(*pi, max_degree=max_degree)
    return out


__all__ = [
    "BlackNode", "RedNode", "black", "bleeding_weight", "drawing_multiplicity",
    "e_coefficient", "enumerate_bleeding", "g_bleeding", "g_enumerated", "g_fixed_point",
    "g_from_words", "g_truncated", "p_weight", "pbar_weight", "red", "weight_factors",
]
