"""Truncated symmetric functions over exact coefficient rings.

A :class:`SymFunc` stores partition-indexed coefficients in one of the
bases ``e, h, m, p``.  Coefficients may be any exact ring elements that
support ``+``, ``*`` and multiplication by Fractions: plain numbers,
:class:`~smirnov_trees.algebra.WeightPoly`, or :class:`STPoly`.

Transition matrices are computed from explicit expansions in ``n``
variables (``n`` variables determine a degree-``n`` symmetric function) and
cached per degree.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial
from numbers import Rational

from .algebra import Series, WeightPoly, partitions_of, sort_partition, z_number

BASES = ("e", "h", "m", "p")
DEFAULT_MAX_DEGREE = 7


# -- polynomials in x (sorted-label-tuple monomials) ------------------------

def xpoly_add(a, b):
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def xpoly_mul(a, b, max_degree=None):
    out = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            if max_degree is not None and len(k1) + len(k2) > max_degree:
                continue
            k = tuple(sorted(k1 + k2))
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _generator(basis, k, nvars):
    labels = range(1, nvars + 1)
    if basis == "e":
        return {c: 1 for c in combinations(labels, k)}
    if basis == "h":
        return {c: 1 for c in combinations_with_replacement(labels, k)}
    if basis == "p":
        return {(i,) * k: 1 for i in labels}
    raise ValueError(basis)


def monomial_expansion(pi, nvars):
    """``m_pi`` in ``nvars`` variables."""
    if len(pi) > nvars:
        return {}
    padded = tuple(pi) + (0,) * (nvars - len(pi))
    out = {}
    for arrangement in set(permutations(padded)):
        key = tuple(i + 1 for i, e in enumerate(arrangement) for _ in range(e))
        out[key] = 1
    return out


def expand_basis_element(basis, pi, nvars):
    if basis == "m":
        return monomial_expansion(pi, nvars)
    poly = {(): 1}
    for part in pi:
        poly = xpoly_mul(poly, _generator(basis, part, nvars))
    return poly


def partition_monomial(pi):
    """The x-monomial ``x1^pi1 x2^pi2 ...``."""
    return tuple(i + 1 for i, part in enumerate(pi) for _ in range(part))


@lru_cache(maxsize=None)
def to_m_matrix(basis, n):
    """``b_lam = sum_mu A[lam][mu] m_mu`` over partitions of ``n``."""
    parts = partitions_of(n)
    if basis == "m":
        return {lam: {lam: 1} for lam in parts}
    out = {}
    for lam in parts:
        poly = expand_basis_element(basis, lam, n)
        row = {}
        for mu in parts:
            c = poly.get(partition_monomial(mu), 0)
            if c:
                row[mu] = c
        out[lam] = row
    return out


@lru_cache(maxsize=None)
def from_m_matrix(basis, n):
    """``m_mu = sum_lam B[mu][lam] b_lam`` (inverse of :func:`to_m_matrix`)."""
    parts = partitions_of(n)
    if basis == "m":
        return {lam: {lam: 1} for lam in parts}
    import sympy

    a = to_m_matrix(basis, n)
    mat = sympy.Matrix([[a[lam].get(mu, 0) for mu in parts] for lam in parts])
    inv = mat.inv()
    out = {}
    for i, mu in enumerate(parts):
        row = {}
        for j, lam in enumerate(parts):
            v = inv[i, j]
            if v != 0:
                row[lam] = Fraction(int(v.p), int(v.q))
        out[mu] = {k: (v.numerator if v.denominator == 1 else v) for k, v in row.items()}
    return out


def _zero_like():
    return 0


def _scale(c, k):
    if k == 1:
        return c
    return c * k


class SymFunc:
    """A symmetric function truncated to degree ``max_degree``."""

    __slots__ = ("basis", "coeffs", "max_degree")

    def __init__(self, basis, coeffs=None, max_degree=DEFAULT_MAX_DEGREE):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean = {}
        for pi, c in (coeffs or {}).items():
            pi = sort_partition(pi)
            if sum(pi) > max_degree:
                continue
            if c:
                clean[pi] = clean.get(pi, 0) + c
                if not clean[pi]:
                    del clean[pi]
        self.basis = basis
        self.coeffs = clean
        self.max_degree = max_degree

    # construction ----------------------------------------------------------
    @classmethod
    def element(cls, basis, pi, coeff=1, max_degree=DEFAULT_MAX_DEGREE):
        return cls(basis, {tuple(pi): coeff}, max_degree)

    @classmethod
    def e(cls, *pi, coeff=1, max_degree=DEFAULT_MAX_DEGREE):
        return cls.element("e", pi, coeff, max_degree)

    @classmethod
    def h(cls, *pi, coeff=1, max_degree=DEFAULT_MAX_DEGREE):
        return cls.element("h", pi, coeff, max_degree)

    @classmethod
    def m(cls, *pi, coeff=1, max_degree=DEFAULT_MAX_DEGREE):
        return cls.element("m", pi, coeff, max_degree)

    @classmethod
    def p(cls, *pi, coeff=1, max_degree=DEFAULT_MAX_DEGREE):
        return cls.element("p", pi, coeff, max_degree)

    @classmethod
    def scalar(cls, c, basis="e", max_degree=DEFAULT_MAX_DEGREE):
        return cls(basis, {(): c}, max_degree)

    # basics ----------------------------------------------------------------
    def __repr__(self):
        return f"SymFunc({self.basis!r}, {self.coeffs!r}, max_degree={self.max_degree})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), [-x for x in kv[0]]))
        out = []
        for pi, c in items:
            name = self.basis + ("[" + ",".join(map(str, pi)) + "]" if pi else "[]")
            out.append(f"({c})*{name}")
        return " + ".join(out)

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, pi):
        return self.coeffs.get(sort_partition(pi), 0)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), [-x for x in kv[0]]))

    def degrees(self):
        return sorted({sum(pi) for pi in self.coeffs})

    def degree_part(self, n):
        return SymFunc(self.basis, {pi: c for pi, c in self.coeffs.items() if sum(pi) == n},
                       self.max_degree)

    def truncate(self, d):
        return SymFunc(self.basis, self.coeffs, min(d, self.max_degree))

    def map_coeffs(self, fn):
        return SymFunc(self.basis, {pi: fn(c) for pi, c in self.coeffs.items()}, self.max_degree)

    def constant_term(self):
        return self.coeffs.get((), 0)

    # basis change ----------------------------------------------------------
    def convert(self, target):
        if target not in BASES:
            raise ValueError(f"unknown basis {target!r}")
        if target == self.basis:
            return self
        by_degree = {}
        for pi, c in self.coeffs.items():
            by_degree.setdefault(sum(pi), {})[pi] = c
        out = {}
        for n, part in by_degree.items():
            if n == 0:
                out[()] = part[()]
                continue
            a = to_m_matrix(self.basis, n)
            in_m = {}
            for lam, c in part.items():
                for mu, k in a[lam].items():
                    in_m[mu] = in_m.get(mu, 0) + _scale(c, k)
            b = from_m_matrix(target, n)
            for mu, c in in_m.items():
                if not c:
                    continue
                for nu, k in b[mu].items():
                    out[nu] = out.get(nu, 0) + _scale(c, k)
        return SymFunc(target, out, self.max_degree)

    # arithmetic ------------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, SymFunc):
            return other.convert(self.basis)
        return SymFunc.scalar(other, self.basis, self.max_degree)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coeffs)
        for pi, c in other.coeffs.items():
            out[pi] = out[pi] + c if pi in out else c
        return SymFunc(self.basis, out, min(self.max_degree, other.max_degree))

    __radd__ = __add__

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            if isinstance(other, Series):
                return NotImplemented
            return self.map_coeffs(lambda c: c * other)
        if self.basis == "m":
            return (self.convert("e") * other).convert("m")
        other = other.convert(self.basis)
        deg = min(self.max_degree, other.max_degree)
        out = {}
        for pi1, c1 in self.coeffs.items():
            n1 = sum(pi1)
            for pi2, c2 in other.coeffs.items():
                if n1 + sum(pi2) > deg:
                    continue
                pi = sort_partition(pi1 + pi2)
                v = c1 * c2
                out[pi] = out[pi] + v if pi in out else v
        return SymFunc(self.basis, out, deg)

    def __rmul__(self, other):
        return self.map_coeffs(lambda c: other * c)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (Fraction(1) / other)
        return NotImplemented

    def __pow__(self, k):
        result = SymFunc.scalar(1, self.basis, self.max_degree)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            other = other.convert(self.basis)
            return self.coeffs == other.coeffs
        if isinstance(other, Rational) or isinstance(other, WeightPoly):
            return self.coeffs == ({(): other} if other else {})
        return NotImplemented

    __hash__ = None

    def unit_inverse(self):
        """Inverse of a scalar (degree-0) symmetric function."""
        if set(self.coeffs) - {()} or () not in self.coeffs:
            raise ZeroDivisionError("only nonzero scalars are units here")
        c = self.coeffs[()]
        inv = Fraction(1) / c if isinstance(c, Rational) else c.unit_inverse()
        return SymFunc.scalar(inv, self.basis, self.max_degree)

    def inverse(self):
        """Inverse in the graded ring; the constant term must be a unit."""
        c0 = self.constant_term()
        inv0 = SymFunc.scalar(c0, self.basis, self.max_degree).unit_inverse()
        rest = (self - c0) * inv0
        out = SymFunc.scalar(1, self.basis, self.max_degree)
        power = out
        for _ in range(self.max_degree):
            power = power * (-rest)
            out = out + power
        return out * inv0

    # involution and inner product -----------------------------------------
    def omega(self):
        if self.basis == "e":
            return SymFunc("h", self.coeffs, self.max_degree)
        if self.basis == "h":
            return SymFunc("e", self.coeffs, self.max_degree)
        if self.basis == "p":
            return SymFunc("p", {pi: (c if (sum(pi) - len(pi)) % 2 == 0 else -c)
                                 for pi, c in self.coeffs.items()}, self.max_degree)
        return self.convert("e").omega().convert("m")

    def inner(self, other):
        """Hall inner product: ``<m_lam, h_mu> = delta``."""
        f = self.convert("m")
        g = other.convert("h") if isinstance(other, SymFunc) else other
        total = 0
        for pi, c in f.coeffs.items():
            d = g.coeffs.get(pi)
            if d is not None and c and d:
                total = total + c * d
        return total

    def expand(self, nvars):
        """Monomial expansion in ``nvars`` variables."""
        f = self.convert("m")
        out = {}
        for pi, c in f.coeffs.items():
            for key in monomial_expansion(pi, nvars):
                out[key] = c
        return out

    def to_json(self, coeff_json=None):
        if coeff_json is None:
            coeff_json = lambda c: c.to_json() if hasattr(c, "to_json") else str(c)  # noqa: E731
        return {
            "basis": self.basis,
            "maxdeg": self.max_degree,
            "terms": [{"partition": list(pi), "coeff": coeff_json(c)} for pi, c in self.items()],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["basis"], {tuple(t["partition"]): WeightPoly.from_json(t["coeff"])
                                   for t in data["terms"]}, data["maxdeg"])


def basis_convert(f, target):
    return f.convert(target)


def omega(f):
    return f.omega()


def hall_inner(f, g):
    return f.inner(g)


def _orbit_size(exps):
    counts = {}
    for e in exps:
        counts[e] = counts.get(e, 0) + 1
    size = factorial(len(exps))
    for k in counts.values():
        size //= factorial(k)
    return size


class SymmetryError(ValueError):
    pass


def from_monomial_data(n, data, max_degree=DEFAULT_MAX_DEGREE):
    """The degree-``n`` symmetric function whose expansion in ``x1..xn`` is
    ``data`` (sorted-label-tuple monomials to coefficients), in the M basis.

    Raises :class:`SymmetryError` unless ``data`` is homogeneous of degree
    ``n`` and invariant under every permutation of ``1..n``.
    """
    classes = {}
    for key, c in data.items():
        if not c:
            continue
        if len(key) != n or any(not 1 <= lab <= n for lab in key):
            raise SymmetryError(f"monomial {key!r} is not of degree {n} in x1..x{n}")
        exps = tuple(key.count(i) for i in range(1, n + 1))
        pi = sort_partition(exps)
        classes.setdefault(pi, []).append((exps, c))
    out = {}
    for pi, entries in classes.items():
        values = {c for _, c in entries}
        if len(values) != 1:
            raise SymmetryError(f"coefficients differ within the orbit of m{list(pi)}")
        full = _orbit_size(tuple(pi) + (0,) * (n - len(pi)))
        if len(entries) != full:
            raise SymmetryError(f"orbit of m{list(pi)} only partially present "
                                f"({len(entries)} of {full} monomials)")
        out[pi] = entries[0][1]
    return SymFunc("m", out, max(max_degree, n))


# -- polynomials in formal s, t --------------------------------------------

class STPoly:
    """Polynomial in formal symbols ``s, t``; ``terms`` maps ``(i, j)`` to
    the coefficient of ``s^i t^j``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def s(cls):
        return cls({(1, 0): 1})

    @classmethod
    def t(cls):
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    def _lift(self, other):
        if isinstance(other, STPoly):
            return other
        if isinstance(other, (Rational, WeightPoly)):
            return STPoly.const(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return STPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return STPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational) or isinstance(other, WeightPoly):
            return STPoly({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, STPoly):
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                v = c1 * c2
                out[k] = out[k] + v if k in out else v
        return STPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = STPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def unit_inverse(self):
        if set(self.terms) != {(0, 0)}:
            raise ZeroDivisionError("only nonzero constants are units")
        c = self.terms[(0, 0)]
        return STPoly.const(Fraction(1) / c if isinstance(c, Rational) else c.unit_inverse())

    def subs(self, s, t, one=1):
        """Evaluate at ring elements ``s`` and ``t``."""
        spow, tpow = [one], [one]
        total = 0
        for (i, j), c in sorted(self.terms.items()):
            while len(spow) <= i:
                spow.append(spow[-1] * s)
            while len(tpow) <= j:
                tpow.append(tpow[-1] * t)
            total = total + c * (spow[i] * tpow[j])
        return total

    def homogenize(self, degree):
        """Replace each ``t^j`` (with ``s^0``) by ``s^(degree-j) t^j``."""
        if any(i for i, _ in self.terms):
            raise ValueError("homogenize expects a polynomial in t alone")
        return STPoly({(degree - j, j): c for (_, j), c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), -kv[0][0])):
            mono = "*".join(x for x in ((f"s^{i}" if i > 1 else "s" if i else ""),
                                        (f"t^{j}" if j > 1 else "t" if j else "")) if x)
            out.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(out)

    __repr__ = __str__


def _compositions_min2(total):
    """Compositions of ``total`` with every part >= 2."""
    if total == 0:
        yield ()
        return
    for first in range(2, total + 1):
        for rest in _compositions_min2(total - first):
            yield (first,) + rest


def sw_des_formula(n, max_degree=DEFAULT_MAX_DEGREE):
    """Descent generating function of Smirnov words of length ``n`` in the E
    basis, coefficients polynomials in ``t``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t = STPoly.t()
    out = {}
    for k in _compositions_min2(n + 1):
        pi = sort_partition((k[0] - 1,) + k[1:])
        coeff = t ** (len(k) - 1)
        for ki in k:
            coeff = coeff * sum((t ** j for j in range(ki - 1)), STPoly())
        out[pi] = out[pi] + coeff if pi in out else coeff
    return SymFunc("e", out, max(max_degree, n))


def sw_formula(n, max_degree=DEFAULT_MAX_DEGREE):
    """Ascent/descent generating function of Smirnov words of length ``n``:
    the descent formula re-homogenized with ``s^asc``."""
    return sw_des_formula(n, max_degree).map_coeffs(lambda c: c.homogenize(n - 1))


def sw_formula_product_form(n, max_degree=DEFAULT_MAX_DEGREE):
    """Same function from the fully expanded product over the composition:
    ``(s^(k1-2) + ... + t^(k1-2)) * prod_{i>=2} (s^(ki-1) t + ... + s t^(ki-1))``."""
    s, t = STPoly.s(), STPoly.t()
    out = {}
    for k in _compositions_min2(n + 1):
        pi = sort_partition((k[0] - 1,) + k[1:])
        coeff = sum((s ** (k[0] - 2 - j) * t ** j for j in range(k[0] - 1)), STPoly())
        for ki in k[1:]:
            coeff = coeff * sum((s ** (ki - j) * t ** j for j in range(1, ki)), STPoly())
        out[pi] = out[pi] + coeff if pi in out else coeff
    return SymFunc("e", out, max(max_degree, n))


def e_series(max_degree, basis="e"):
    """``E(z) = sum_n e_n z^n`` truncated at ``z^max_degree``."""
    return Series([SymFunc.e(*((n,) if n else ()), max_degree=max_degree).convert(basis)
                   for n in range(max_degree + 1)], max_degree)


def character_values(f):
    """``chi(nu) = <f, p_nu>`` for every partition ``nu`` of the degree of
    the homogeneous scalar symmetric function ``f``."""
    degs = f.degrees()
    if len(degs) != 1:
        raise ValueError("character_values expects a homogeneous function")
    n = degs[0]
    fp = f.convert("p")
    out = {}
    for nu in partitions_of(n):
        v = fp.coefficient(nu) * z_number(nu)
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ValueError(f"non-integral character value {v} at {nu}")
            v = v.numerator
        out[nu] = v
    return out
