from itertools import product

import pytest

from smirnov_trees.algebra import WeightPoly
from smirnov_trees.core import (
    Tree,
    enumerate_labeled_trees,
    enumerate_smirnov_trees,
    enumerate_smirnov_words,
    enumerate_standard_trees,
    from_json,
    is_smirnov_tree,
    is_smirnov_word,
    nodes,
    parse_tree,
    principal_data,
    size,
    to_json,
    to_text,
    tree_stats,
    tree_weight,
    word_stats,
)


def test_fig1_weight(fig1):
    tw = tree_weight(fig1)
    assert tw.edge == WeightPoly.monomial((4, 3, 2, 3))
    assert str(tw) == "ra^4*rd^3*la^2*ld^3 * x1^3*x2^2*x3^6*x4^2"
    assert size(fig1) == 13
    assert is_smirnov_tree(fig1)


def test_fig1_principal_data(fig1):
    pd = principal_data(fig1)
    assert pd.labels == (3, 3, 4, 1, 3)
    assert (pd.a, pd.M, pd.m) == (3, 4, 1)
    assert pd.node.right is None


def test_principal_data_small():
    pd = principal_data(Tree(4))
    assert pd.labels == (4,) and pd.a == pd.M == pd.m == 4
    pd = principal_data(parse_tree("1(_,2)"))
    assert pd.labels == (1, 2) and (pd.a, pd.M, pd.m) == (2, 2, 1)


def test_principal_data_rejects_non_smirnov():
    with pytest.raises(ValueError):
        principal_data(parse_tree("1(1,_)"))


def test_edge_conventions():
    # right edge: weak ascent counted as ra
    assert tree_stats(parse_tree("1(_,1)")) == (1, 0, 0, 0)
    assert tree_stats(parse_tree("2(_,1)")) == (0, 1, 0, 0)
    # left edge read from child up to parent
    assert tree_stats(parse_tree("2(1,_)")) == (0, 0, 1, 0)
    assert tree_stats(parse_tree("2(2,1)")) == (0, 1, 1, 0)
    assert tree_stats(parse_tree("1(2,_)")) == (0, 0, 0, 1)


def test_smirnov_tree_conditions():
    assert is_smirnov_tree(parse_tree("2(2,1)"))
    assert not is_smirnov_tree(parse_tree("2(2,_)"))
    assert not is_smirnov_tree(parse_tree("2(2,3)"))
    assert is_smirnov_tree(parse_tree("2(3,2)"))
    assert not is_smirnov_tree(parse_tree("2(1,2)"))
    assert not is_smirnov_tree(parse_tree("2(_,2)"))


def test_words():
    assert list(enumerate_smirnov_words(2, 2)) == [(1, 2), (2, 1)]
    assert sum(1 for _ in enumerate_smirnov_words(1, 3)) == 3
    for n in range(1, 7):
        for k in range(1, 5):
            assert sum(1 for _ in enumerate_smirnov_words(n, k)) == k * (k - 1) ** (n - 1)
    assert is_smirnov_word((1, 2, 1)) and not is_smirnov_word((1, 1))
    assert word_stats((4, 2, 5, 3, 4, 2, 4, 2)) == (3, 4)


def test_words_brute_force():
    for n in range(1, 5):
        oracle = [w for w in product(range(1, 4), repeat=n) if is_smirnov_word(w)]
        assert list(enumerate_smirnov_words(n, 3)) == oracle


def test_tree_enumeration_matches_filter():
    for n in range(1, 5):
        for k in range(1, 4):
            oracle = {t for t in enumerate_labeled_trees(n, k) if is_smirnov_tree(t)}
            got = list(enumerate_smirnov_trees(n, k))
            assert len(got) == len(set(got))
            assert set(got) == oracle


def test_tree_enumeration_small_counts():
    assert sum(1 for _ in enumerate_smirnov_trees(1, 5)) == 5
    assert sum(1 for _ in enumerate_smirnov_trees(2, 1)) == 0
    assert sum(1 for _ in enumerate_labeled_trees(3, 2)) == 40
    assert sum(1 for _ in enumerate_smirnov_trees(3, 2)) == 12


def test_enumeration_is_deterministic():
    assert list(enumerate_smirnov_trees(3, 3)) == list(enumerate_smirnov_trees(3, 3))


def test_standard_trees_are_smirnov():
    counts = [sum(1 for _ in enumerate_standard_trees(n)) for n in range(1, 6)]
    assert counts == [1, 4, 30, 336, 5040]
    assert all(is_smirnov_tree(t) for t in enumerate_standard_trees(4))


def test_weight_degree_bookkeeping():
    for t in enumerate_smirnov_trees(4, 3):
        tw = tree_weight(t)
        assert tw.edge.degree() + 1 == len(tw.x) == size(t)
        assert principal_data(t).node.right is None


def test_serialization_round_trip(fig1):
    assert from_json(to_json(fig1)) == fig1
    assert parse_tree(to_text(fig1)) == fig1
    assert to_text(parse_tree("1(_,2)")) == "1(_,2(_,_))"
    assert to_json(Tree(1)) == {"label": 1, "left": None, "right": None}


@pytest.mark.parametrize("bad", ["", "1(", "1(_,2", "a", "1(_,_,_)", "(1)"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_tree(bad)


def test_from_json_rejects():
    with pytest.raises(ValueError):
        from_json({"label": 0, "left": None, "right": None})
    with pytest.raises(ValueError):
        from_json({"label": 1, "kids": []})


def test_nodes_preorder(fig1):
    assert [n.label for n in nodes(fig1)] == [3, 3, 2, 3, 4, 1, 3, 3, 1, 4, 1, 3, 2]
