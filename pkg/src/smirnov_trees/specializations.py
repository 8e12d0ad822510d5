"""Standard trees, the exponential specialization, Gessel's functional
equation, counting identities and the symmetric-group character tables.

Checks return plain report dicts with an ``"ok"`` flag, so that the CLI can
print them as JSON and the tests can assert on them.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path

from .algebra import ONE, RA, RD, LA, LD, Series, WeightPoly, partitions_of, z_number
from .bleeding import DN1, DN2, UP1, UP2, g_bleeding, g_truncated
from .core import enumerate_smirnov_words, enumerate_standard_trees, tree_stats, word_stats
from .symfunc import STPoly, SymFunc, character_values, from_monomial_data

DATA_DIR = Path(__file__).parent / "data"


def catalan(n):
    c = [1]
    for m in range(1, n + 1):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c[n]


@lru_cache(maxsize=None)
def standard_stat_counts(n):
    """Statistic vector ``(rasc, rdes, lasc, ldes)`` -> number of standard
    trees on ``n`` nodes."""
    counts = {}
    for t in enumerate_standard_trees(n):
        st = tree_stats(t)
        counts[st] = counts.get(st, 0) + 1
    return counts


def standard_tree_poly(n):
    """Sum of edge weights over standard trees on ``n`` nodes."""
    return WeightPoly({st: c for st, c in standard_stat_counts(n).items()})


def b_series(n_max):
    """B by direct enumeration, as an exponential series."""
    return Series([0] + [standard_tree_poly(n) for n in range(1, n_max + 1)], n_max,
                  mode="exponential")


def ex(f, order=None):
    """Exponential specialization ``e_n -> x^n / n!`` as an ordinary series."""
    f = f.convert("e")
    order = f.max_degree if order is None else order
    coeffs = [0] * (order + 1)
    for pi, c in f.coeffs.items():
        n = sum(pi)
        if n > order:
            continue
        denom = 1
        for part in pi:
            denom *= factorial(part)
        coeffs[n] = coeffs[n] + c * Fraction(1, denom)
    return Series(coeffs, order)


def b_series_from_g(n_max, method="bleeding"):
    g = g_bleeding(n_max) if method == "bleeding" else g_truncated(n_max)
    return ex(g, n_max).to_exponential()


def check_b_series(n_max=5):
    direct = b_series(n_max)
    report = {"check": "b-series", "n_max": n_max, "ok": True, "degrees": []}
    for method in ("bleeding", "enumerate"):
        via_g = b_series_from_g(n_max, method)
        for n in range(n_max + 1):
            if direct[n] != via_g[n]:
                report["ok"] = False
                report.setdefault("mismatch", []).append(
                    {"n": n, "method": method, "direct": str(direct[n]), "via_g": str(via_g[n])})
    report["degrees"] = [{"n": n, "b_n": str(direct[n])} for n in range(1, n_max + 1)]
    return report


# -- counting identities ---------------------------------------------------

def check_counting_identities(n_max=6):
    """``[x1..xn] G`` at all edge variables 1 is ``n! Cat_n``; with the
    strict-left-descent variable set to 0 it is ``(n+1)^(n-1)``."""
    rows, ok, first_fail = [], True, None
    g = g_bleeding(n_max)
    for n in range(1, n_max + 1):
        counts = standard_stat_counts(n)
        total = sum(counts.values())
        no_ld = sum(c for st, c in counts.items() if st[3] == 0)
        # the same numbers read off the bleeding-tree e-expansion
        bleed = ex(g.degree_part(n), n)[n] * factorial(n)
        row = {
            "n": n,
            "all_ones": total,
            "expected_all_ones": factorial(n) * catalan(n),
            "ld_zero": no_ld,
            "expected_ld_zero": (n + 1) ** (n - 1),
            "bleeding_all_ones": bleed.evaluate((1, 1, 1, 1)),
            "bleeding_ld_zero": bleed.evaluate((1, 1, 1, 0)),
        }
        good = (row["all_ones"] == row["expected_all_ones"] == row["bleeding_all_ones"]
                and row["ld_zero"] == row["expected_ld_zero"] == row["bleeding_ld_zero"])
        if not good and first_fail is None:
            first_fail = n
        ok = ok and good
        rows.append(row)
    return {"check": "counting-identities", "ok": ok, "first_failure": first_fail, "rows": rows}


# -- Gessel's equation -----------------------------------------------------

def _first_mismatch_sym(lhs, rhs, trunc):
    for n in range(trunc + 1):
        a, b = lhs.degree_part(n), rhs.degree_part(n)
        if a != b:
            return {"degree": n, "lhs": str(a), "rhs": str(b.convert(a.basis))}
    return None


def check_gessel_equation(trunc=5, method="bleeding"):
    """Both forms of the multiplicative functional equation, truncated.

    (i) in the E basis (a degree-``trunc`` symmetric function is determined
    by its expansion in ``trunc`` variables, so this is the same test);
    (ii) after the exponential specialization, on B from standard trees.
    """
    if not 1 <= trunc <= 6:
        raise ValueError("trunc must be between 1 and 6")
    g = g_bleeding(trunc) if method == "bleeding" else g_truncated(trunc)
    g = g.truncate(trunc)
    one = SymFunc.scalar(1, "e", trunc)
    s = g * UP2 + UP1
    t = g * DN2 + DN1
    lhs = (one + g * RA) * (one + g * LA) * ((one + g * RD) * (one + g * LD)).inverse()

    def big_e(z):
        total, power = one, one
        for n in range(1, trunc + 1):
            power = power * z
            total = total + SymFunc.e(n, max_degree=trunc) * power
        return total

    rhs = big_e(s) * big_e(t).inverse()
    sym_fail = _first_mismatch_sym(lhs, rhs, trunc)

    b = b_series(trunc).to_ordinary()
    lhs2 = (1 + RA * b) * (1 + LA * b) / ((1 + RD * b) * (1 + LD * b))
    inner = ((UP2 - DN2) * b + (UP1 - DN1)).shift(1)
    rhs2 = inner.exp()
    exp_fail = None
    for n in range(trunc + 1):
        if lhs2[n] != rhs2[n]:
            exp_fail = {"degree": n, "lhs": str(lhs2[n]), "rhs": str(rhs2[n])}
            break
    return {
        "check": "gessel",
        "trunc": trunc,
        "ok": sym_fail is None and exp_fail is None,
        "symmetric_form": sym_fail or "pass",
        "exponential_form": exp_fail or "pass",
    }


# -- word identities -------------------------------------------------------

def word_sum(n, st=True):
    """Brute-force sum over Smirnov words of length ``n`` over ``[n]`` of
    ``s^asc t^des x_w`` (or just ``t^des`` when ``st`` is False), as a
    symmetric function in the E basis with :class:`STPoly` coefficients."""
    data = {}
    for w in enumerate_smirnov_words(n, n):
        a, d = word_stats(w)
        key = tuple(sorted(w))
        mono = STPoly({(a if st else 0, d): 1})
        data[key] = data[key] + mono if key in data else mono
    return from_monomial_data(n, data).convert("e")


def check_word_series(trunc=5):
    """Word-series identities over brute-force Smirnov-word sums.

    The descent series satisfies ``(W(z;1,t) - 1)(E(zt) - t E(z)) =
    E(z) - E(zt)``; the constant term of ``E(zt) - t E(z)`` is ``1 - t``,
    not a unit, so the identity is checked cross-multiplied, and in division
    form at ``t = 1/2``.  The ascent/descent series is the
    re-homogenization ``W_n(s, t) = s^(n-1) W_n(1, t/s)``.
    """
    if not 1 <= trunc <= 6:
        raise ValueError("trunc must be between 1 and 6")
    t = STPoly.t()
    W = [SymFunc("e", {}, trunc)] + [word_sum(n, st=False).truncate(trunc)
                                      for n in range(1, trunc + 1)]
    E = [SymFunc.e(*((n,) if n else ()), max_degree=trunc) for n in range(trunc + 1)]
    w_series = Series(W, trunc)
    e_z = Series(E, trunc)
    e_zt = Series([E[n] * t ** n for n in range(trunc + 1)], trunc)
    lhs = w_series * (e_zt - e_z * t)
    rhs = e_z - e_zt
    report = {"check": "sharewachs", "trunc": trunc, "ok": True}
    for n in range(trunc + 1):
        if lhs[n] != rhs[n]:
            report["ok"] = False
            report["cross_multiplied"] = {"degree": n, "lhs": str(lhs[n]), "rhs": str(rhs[n])}
            break
    else:
        report["cross_multiplied"] = "pass"

    half = Fraction(1, 2)
    at_half = lambda f: f.map_coeffs(lambda c: c.subs(1, half))  # noqa: E731
    num = Series([E[n] - E[n] * half ** n for n in range(trunc + 1)], trunc)
    den = Series([E[n] * half ** n - E[n] * half for n in range(trunc + 1)], trunc)
    quotient = num / den
    report["division_at_half"] = "pass"
    for n in range(1, trunc + 1):
        if quotient[n] != at_half(W[n]):
            report["ok"] = False
            report["division_at_half"] = {"degree": n, "quotient": str(quotient[n]),
                                          "words": str(at_half(W[n]))}
            break

    report["asc_des"] = "pass"
    for n in range(1, trunc + 1):
        full = word_sum(n, st=True)
        rehom = W[n].map_coeffs(lambda c: c.homogenize(n - 1))
        if full != rehom:
            report["ok"] = False
            report["asc_des"] = {"degree": n}
            break

    # t = 1: evaluating at x_1 = ... = x_k = 1 counts words, k (k-1)^(n-1)
    report["word_counts"] = "pass"
    for n in range(1, trunc + 1):
        f = W[n].map_coeffs(lambda c: c.subs(1, 1))
        for k in range(1, trunc + 1):
            got = sum(f.expand(k).values())
            if got != k * (k - 1) ** (n - 1):
                report["ok"] = False
                report["word_counts"] = {"n": n, "k": k, "got": got}
    return report


# -- character tables ------------------------------------------------------

EDGE_SYMMETRIES = (
    (2, 1, 0, 3),   # ra <-> la
    (0, 3, 2, 1),   # rd <-> ld
    (1, 0, 3, 2),   # ra <-> rd and la <-> ld
)


def monomial_orbit(exps):
    seen, todo = {tuple(exps)}, [tuple(exps)]
    while todo:
        e = todo.pop()
        for perm in EDGE_SYMMETRIES:
            f = tuple(e[p] for p in perm)
            if f not in seen:
                seen.add(f)
                todo.append(f)
    return seen


def _monomial_key(exps):
    return tuple(-x for x in exps)


def character_table(n, omega=True, method="bleeding"):
    """Edge monomial (exponent tuple) -> {cycle type: character value}.

    Row ``mu`` is the class function whose Frobenius image is the
    coefficient of ``mu`` in ``omega`` of the degree-``n`` part of G.
    """
    if not 1 <= n <= 6:
        raise ValueError("n must be between 1 and 6")
    g = g_bleeding(n) if method == "bleeding" else g_truncated(n)
    g = g.degree_part(n)
    if omega:
        g = g.omega()
    g = g.convert("p")
    monos = set()
    for c in g.coeffs.values():
        monos.update(c.terms)
    table = {}
    for mu in sorted(monos, key=_monomial_key):
        f = SymFunc("p", {pi: c.coefficient(mu) for pi, c in g.coeffs.items()}, g.max_degree)
        table[mu] = character_values(f)
    return table


def cycle_types(n):
    """Column order: reverse-lex partitions, starting from ``1^n``."""
    return list(reversed(partitions_of(n)))


def grouped_rows(table, n):
    """Group rows by the edge-variable symmetries.  Returns a list of
    ``(monomials, values)`` sorted by the ``1^n`` value; raises if two rows
    in one orbit disagree."""
    cols = cycle_types(n)
    seen, rows = set(), []
    for mu in sorted(table, key=_monomial_key):
        if mu in seen:
            continue
        orbit = sorted((m for m in monomial_orbit(mu) if m in table), key=_monomial_key)
        seen.update(orbit)
        values = [table[mu][nu] for nu in cols]
        for m in orbit:
            if [table[m][nu] for nu in cols] != values:
                raise AssertionError(f"rows {mu} and {m} differ")
        rows.append((orbit, values))
    rows.sort(key=lambda r: (r[1][0], _monomial_key(r[0][0])))
    return rows


def mono_text(exps):
    return str(WeightPoly.monomial(exps))


def _cols_text(n):
    return ["".join(map(str, nu)) for nu in cycle_types(n)]


def table_csv(n, omega=True, grouped=True, method="bleeding"):
    table = character_table(n, omega, method)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["monomials"] + _cols_text(n))
    if grouped:
        for orbit, values in grouped_rows(table, n):
            writer.writerow([" ".join(mono_text(m) for m in orbit)] + values)
    else:
        cols = cycle_types(n)
        for mu in sorted(table, key=_monomial_key):
            writer.writerow([mono_text(mu)] + [table[mu][nu] for nu in cols])
    return out.getvalue()


def table_json(n, omega=True, grouped=True, method="bleeding"):
    table = character_table(n, omega, method)
    cols = cycle_types(n)
    if grouped:
        rows = [{"monomials": [mono_text(m) for m in orbit], "values": values}
                for orbit, values in grouped_rows(table, n)]
    else:
        rows = [{"monomials": [mono_text(mu)], "values": [table[mu][nu] for nu in cols]}
                for mu in sorted(table, key=_monomial_key)]
    return json.dumps({"n": n, "omega": omega, "cycle_types": [list(nu) for nu in cols],
                       "rows": rows}, indent=2) + "\n"


def golden_table_path(n):
    return DATA_DIR / f"char_table_n{n}.csv"


def check_character_tables(ns=(3, 4, 5)):
    report = {"check": "character-tables", "ok": True, "tables": []}
    for n in ns:
        produced = table_csv(n)
        entry = {"n": n}
        path = golden_table_path(n)
        entry["golden_match"] = path.exists() and path.read_text() == produced
        table = character_table(n)
        counts = standard_stat_counts(n)
        ones = (1,) * n
        entry["first_column_counts"] = all(table[mu][ones] == counts.get(mu, 0) for mu in table) \
            and all(mu in table for mu in counts)
        entry["first_column_sum"] = sum(table[mu][ones] for mu in table)
        entry["expected_sum"] = factorial(n) * catalan(n)
        entry["nonnegative"] = all(v >= 0 for row in table.values() for v in row.values())
        good = (entry["golden_match"] and entry["first_column_counts"]
                and entry["first_column_sum"] == entry["expected_sum"] and entry["nonnegative"])
        report["ok"] = report["ok"] and good
        report["tables"].append(entry)
    return report


__all__ = [
    "b_series", "b_series_from_g", "catalan", "character_table", "check_b_series",
    "check_character_tables", "check_counting_identities", "check_gessel_equation",
    "check_word_series", "cycle_types", "enumerate_standard_trees", "ex", "grouped_rows",
    "standard_stat_counts", "table_csv", "table_json", "z_number",
]
