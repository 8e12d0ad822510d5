"""Exact polynomials in the four edge variables, integer partitions and
truncated power series.

The edge variables are ordered ``ra, rd, la, ld`` (weak right ascent, strict
right descent, weak left ascent, strict left descent).  Coefficients are
Python integers, promoted to :class:`fractions.Fraction` only when a
division forces it (exponential generating functions divide by ``n!``).
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from numbers import Rational

VARS = ("ra", "rd", "la", "ld")
_ZERO_EXP = (0, 0, 0, 0)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _grlex_key(e):
    # leading (highest) term first
    return (-sum(e), tuple(-x for x in e))


class WeightPoly:
    """Sparse polynomial in ``ra, rd, la, ld`` with exact coefficients.

    Instances are immutable and hashable.  ``terms`` maps exponent
    4-tuples to nonzero coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    e = tuple(e)
                    if len(e) != 4 or any(x < 0 for x in e):
                        raise ValueError(f"bad exponent vector {e!r}")
                    clean[e] = _norm(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c):
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name):
        i = VARS.index(name) if isinstance(name, str) else name
        e = [0, 0, 0, 0]
        e[i] = 1
        return cls({tuple(e): 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls({tuple(exps): coeff})

    @staticmethod
    def _coerce(other):
        if isinstance(other, WeightPoly):
            return other
        if isinstance(other, Rational):
            return WeightPoly.const(other)
        return NotImplemented

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in canonical graded-lex order, leading term first."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return WeightPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return WeightPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            if not other:
                return WeightPoly()
            return WeightPoly({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                out[e] = out.get(e, 0) + c1 * c2
        return WeightPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Rational):
            return NotImplemented
        return self * (Fraction(1) / other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def is_constant(self):
        return all(e == _ZERO_EXP for e in self._terms)

    def constant_term(self):
        return self._terms.get(_ZERO_EXP, 0)

    def is_nonnegative(self):
        return all(c >= 0 for c in self._terms.values())

    def unit_inverse(self):
        if not self.is_constant() or not self:
            raise ZeroDivisionError(f"{self} is not an invertible constant")
        return WeightPoly.const(Fraction(1) / self.constant_term())

    def evaluate(self, vals):
        """Substitute numbers for ``ra, rd, la, ld`` (in that order)."""
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v ** k
            total += term
        return _norm(total) if isinstance(total, Fraction) else total

    def swap(self, perm):
        """Permute the variables: new exponent i is old exponent ``perm[i]``."""
        return WeightPoly({tuple(e[p] for p in perm): c for e, c in self._terms.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e, c in self.items():
            factors = []
            for name, k in zip(VARS, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            neg = c < 0
            mag = -c if neg else c
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"WeightPoly({self})"

    def to_json(self):
        return [{"e": list(e), "c": str(c)} for e, c in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls({tuple(t["e"]): Fraction(t["c"]) for t in data})

    @classmethod
    def parse(cls, text):
        """Parse the canonical text form, e.g. ``2*ra^3*rd^2 - la + 1``."""
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty polynomial text")
        total = WeightPoly()
        for sign, body in re.findall(r"([+-]?)([^+-]+)", text):
            term = WeightPoly.const(-1 if sign == "-" else 1)
            for factor in body.split("*"):
                m = re.fullmatch(r"(ra|rd|la|ld)(?:\^(\d+))?", factor)
                if m:
                    term = term * WeightPoly.var(m.group(1)) ** int(m.group(2) or 1)
                elif re.fullmatch(r"\d+(/\d+)?", factor):
                    term = term * Fraction(factor)
                else:
                    raise ValueError(f"cannot parse factor {factor!r}")
            total = total + term
        return total


ZERO = WeightPoly()
ONE = WeightPoly.const(1)
RA = WeightPoly.var("ra")
RD = WeightPoly.var("rd")
LA = WeightPoly.var("la")
LD = WeightPoly.var("ld")


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_eval(p, vals):
    return p.evaluate(vals)


# -- partitions -------------------------------------------------------------

def partitions_of(n, max_part=None):
    """All partitions of ``n`` as weakly decreasing tuples, reverse-lex order.

    >>> partitions_of(3)
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def multiplicities(pi):
    counts = {}
    for part in pi:
        counts[part] = counts.get(part, 0) + 1
    return counts


def z_number(pi):
    """Centralizer size: prod of i^m_i * m_i! over part sizes i."""
    z = 1
    for i, m in multiplicities(pi).items():
        z *= i ** m * factorial(m)
    return z


def sort_partition(parts):
    return tuple(sorted((p for p in parts if p), reverse=True))


# -- truncated univariate series -------------------------------------------

def _unit_inverse(c):
    if isinstance(c, Rational):
        if not c:
            raise ZeroDivisionError("constant term is zero")
        return Fraction(1) / c
    inv = getattr(c, "unit_inverse", None)
    if inv is None:
        raise ZeroDivisionError(f"cannot invert constant term {c!r}")
    return inv()


class Series:
    """Truncated power series ``sum coeffs[n] x^n`` (or ``x^n/n!``).

    ``mode`` is ``"ordinary"`` or ``"exponential"``.  Coefficients may be
    any exact ring elements supporting ``+``, ``*`` and scalar division
    (Fractions, :class:`WeightPoly`, symmetric functions).  Arithmetic is
    carried out on ordinary series; exponential ones must be converted
    with :meth:`to_ordinary` first.
    """

    def __init__(self, coeffs, order=None, mode="ordinary"):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if mode not in ("ordinary", "exponential"):
            raise ValueError(f"unknown mode {mode!r}")
        coeffs = coeffs[: order + 1] + [0] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order
        self.mode = mode

    def __repr__(self):
        return f"Series({list(self.coeffs)!r}, mode={self.mode!r})"

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.mode != other.mode:
            return self.to_ordinary() == other.to_ordinary()
        n = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    def to_ordinary(self):
        if self.mode == "ordinary":
            return self
        return Series([c * Fraction(1, factorial(n)) if c else 0 for n, c in enumerate(self.coeffs)],
                      self.order)

    def to_exponential(self):
        if self.mode == "exponential":
            return self
        return Series([c * factorial(n) for n, c in enumerate(self.coeffs)], self.order,
                      mode="exponential")

    def _check(self, other):
        if self.mode != "ordinary":
            raise ValueError("convert exponential series with to_ordinary() first")
        if not isinstance(other, Series):
            other = Series([other], self.order)
        if other.mode != "ordinary":
            raise ValueError("convert exponential series with to_ordinary() first")
        return other, min(self.order, other.order)

    def __add__(self, other):
        other, n = self._check(other)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order, self.mode)

    def __sub__(self, other):
        other, n = self._check(other)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], n)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([c * other for c in self.coeffs], self.order, self.mode)
        other, n = self._check(other)
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if _nonzero(a) and _nonzero(b):
                    acc = acc + a * b
            out.append(acc)
        return Series(out, n)

    def __rmul__(self, other):
        return Series([other * c for c in self.coeffs], self.order, self.mode)

    def inverse(self):
        """Multiplicative inverse; the constant term must be a unit."""
        if self.mode != "ordinary":
            raise ValueError("convert exponential series with to_ordinary() first")
        inv0 = _unit_inverse(self.coeffs[0])
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = 0
            for i in range(1, k + 1):
                if _nonzero(self.coeffs[i]) and _nonzero(out[k - i]):
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-(acc * inv0) if _nonzero(acc) else 0)
        return Series(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        inv = Fraction(1) / other if isinstance(other, Rational) else _unit_inverse(other)
        return Series([c * inv for c in self.coeffs], self.order, self.mode)

    def compose(self, inner):
        """``self(inner(x))`` for ``inner`` with zero constant term."""
        inner, n = self._check(inner)
        if _nonzero(inner.coeffs[0]):
            raise ValueError("inner series must have zero constant term")
        result = Series([0], n)
        for c in reversed(self.coeffs[: n + 1]):
            result = result * inner + c
        return result

    def exp(self):
        """``exp(self)`` for a series with zero constant term."""
        if self.mode != "ordinary":
            raise ValueError("convert exponential series with to_ordinary() first")
        if _nonzero(self.coeffs[0]):
            raise ValueError("exp needs a zero constant term")
        out = [1]
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                if _nonzero(self.coeffs[k]) and _nonzero(out[n - k]):
                    acc = acc + self.coeffs[k] * out[n - k] * k
            out.append(acc * Fraction(1, n) if _nonzero(acc) else 0)
        return Series(out, self.order)

    def shift(self, k=1):
        """Multiply by ``x^k``."""
        if self.mode != "ordinary":
            raise ValueError("convert exponential series with to_ordinary() first")
        return Series([0] * k + list(self.coeffs), self.order)


def _nonzero(c):
    return bool(c)
