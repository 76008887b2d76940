"""Commutative polynomials in the weight symbols with rational coefficients.

Variable 0 is the single scalar-type symbol ``λ``; variable ``j >= 1`` is
``λ_j``.  Monomials are exponent tuples with trailing zeros stripped, so a
polynomial never depends on how many variables are "in play".
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple, Union

Exps = Tuple[int, ...]
Scalar = Union[int, Fraction]


def _strip(e: Iterable[int]) -> Exps:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _mul_exps(a: Exps, b: Exps) -> Exps:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return tuple(out)


class LambdaPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exps, Scalar] = ()):
        acc: Dict[Exps, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = _strip(e)
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        self.terms: Dict[Exps, Fraction] = {e: c for e, c in acc.items() if c}

    @classmethod
    def const(cls, c: Scalar) -> "LambdaPoly":
        return cls({(): c})

    @classmethod
    def var(cls, j: int = 0) -> "LambdaPoly":
        return cls({(0,) * j + (1,): 1})

    @staticmethod
    def coerce(x) -> "LambdaPoly":
        if isinstance(x, LambdaPoly):
            return x
        if isinstance(x, (Rational, int)):
            return LambdaPoly.const(x)
        raise TypeError(f"cannot use {type(x).__name__} as a λ-polynomial")

    def is_const(self) -> bool:
        return not self.terms or tuple(self.terms) == ((),)

    def const_value(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        try:
            o = LambdaPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self.terms)
        for e, c in o.terms.items():
            acc[e] = acc.get(e, Fraction(0)) + c
        return LambdaPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            return self + (-LambdaPoly.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return LambdaPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (Rational, int)):
            return LambdaPoly({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        acc: Dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _mul_exps(e1, e2)
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return LambdaPoly(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (Rational, int)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        out = LambdaPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = LambdaPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self.is_const():
            return hash(self.const_value())
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        """Terms by descending total degree, then descending exponents."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    def substitute(self, values: Mapping[int, object]) -> "LambdaPoly":
        """Replace variables by scalars or λ-polynomials; others are kept."""
        out = LambdaPoly()
        for e, c in self.terms.items():
            term = LambdaPoly.const(c)
            kept = []
            for j, x in enumerate(e):
                if x and j in values:
                    term = term * (LambdaPoly.coerce(values[j]) ** x)
                    kept.append(0)
                else:
                    kept.append(x)
            out = out + term * LambdaPoly({tuple(kept): 1})
        return out

    def coefficient_in(self, j: int, power: int) -> "LambdaPoly":
        """Coefficient of ``var(j)**power`` viewed as a polynomial in var j."""
        out = {}
        for e, c in self.terms.items():
            x = e[j] if j < len(e) else 0
            if x == power:
                e2 = list(e) + [0] * max(0, j + 1 - len(e))
                e2[j] = 0
                out[tuple(e2)] = c
        return LambdaPoly(out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "·".join(_var_str(j, x) for j, x in enumerate(e) if x)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}·{mono}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"LambdaPoly({self})"


def _var_str(j: int, x: int) -> str:
    name = "λ" if j == 0 else f"λ{j}"
    return name if x == 1 else f"{name}^{x}"


LAMBDA = LambdaPoly.var(0)


def lam(j: int) -> LambdaPoly:
    """The symbol λ_j (``j >= 1``)."""
    if j < 1:
        raise ValueError("λ_j is indexed from 1")
    return LambdaPoly.var(j)


def clean(c):
    """Collapse constant λ-polynomials to Fractions; keep others as is."""
    if isinstance(c, LambdaPoly):
        return c.const_value() if c.is_const() else c
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (Rational, int)):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")
