"""Smirnov trees: labeled binary trees with a no-equal-neighbour rule, their
generating function G, the bijection with Smirnov words and steps, and the
e-expansion of G via bleeding trees."""
from .algebra import LA, LD, ONE, RA, RD, ZERO, Series, WeightPoly, partitions_of, z_number
from .bijection import (
    D,
    U,
    Triple,
    WordSteps,
    classify,
    f_weight,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
    triple_weight,
    wordsteps_weight,
)
from .bleeding import (
    bleeding_weight,
    drawing_multiplicity,
    e_coefficient,
    enumerate_bleeding,
    g_fixed_point,
    g_from_words,
    g_truncated,
    p_weight,
    pbar_weight,
)
from .core import (
    Tree,
    TreeWeight,
    enumerate_smirnov_trees,
    enumerate_smirnov_words,
    enumerate_standard_trees,
    is_smirnov_tree,
    is_smirnov_word,
    parse_tree,
    principal_data,
    to_text,
    tree_stats,
    tree_weight,
)
from .specializations import (
    b_series,
    character_table,
    check_counting_identities,
    check_gessel_equation,
    check_word_series,
)
from .symfunc import STPoly, SymFunc, from_monomial_data, hall_inner, omega, sw_formula

__version__ = "0.1.0"
