"""Noncommutative polynomials over sp_m(C) and PBW straightening.

An :class:`NcPoly` is a finite map from monomials (tuples of
:class:`~spcasimir.lie.GeneratorId`) to coefficients, where a coefficient is a
:class:`~fractions.Fraction` or a non-constant
:class:`~spcasimir.lambdapoly.LambdaPoly`.  Constant λ-polynomials are always
stored as Fractions so that equality is plain dict equality.

Straightening works by right insertion: a PBW-normal monomial times one more
generator is rewritten with ``x g = g x + [x, g]`` until sorted.  Results for
(normal monomial, generator) pairs are memoized and carry integer
coefficients only, since all structure constants are integers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterator, Mapping, Optional, Sequence, Tuple

from .lambdapoly import LambdaPoly, clean
from .lie import GeneratorId, bracket_terms, check_rank

Monomial = Tuple[GeneratorId, ...]


class RankMismatchError(ValueError):
    pass


def monomial_sort_key(mono: Monomial) -> Tuple:
    return (len(mono), tuple(g.key for g in mono))


class NcPoly:
    """Element of the free algebra (or, after normalization, of U(g))."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Monomial, object] = ()):
        self.rank = check_rank(rank)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Monomial, object] = {}
        for mono, c in items:
            mono = tuple(mono)
            if mono in acc:
                acc[mono] = acc[mono] + c
            else:
                acc[mono] = c
        self.terms: Dict[Monomial, object] = {}
        for mono, c in acc.items():
            c = clean(c)
            if c:
                self.terms[mono] = c

    @classmethod
    def _raw(cls, rank: int, terms: Dict[Monomial, object]) -> "NcPoly":
        # terms already pruned and cleaned
        out = cls.__new__(cls)
        out.rank = rank
        out.terms = terms
        return out

    @classmethod
    def zero(cls, rank: int) -> "NcPoly":
        return cls(rank)

    @classmethod
    def const(cls, rank: int, c=1) -> "NcPoly":
        return cls(rank, {(): c})

    @classmethod
    def gen(cls, g: GeneratorId, rank: int, c=1) -> "NcPoly":
        g.check_range(rank)
        return cls(rank, {(g,): c})

    @classmethod
    def monomial(cls, gens: Sequence[GeneratorId], rank: int, c=1) -> "NcPoly":
        for g in gens:
            g.check_range(rank)
        return cls(rank, {tuple(gens): c})

    # -- ring structure ------------------------------------------------------

    def _same(self, other: "NcPoly") -> None:
        if other.rank != self.rank:
            raise RankMismatchError(f"rank {self.rank} vs rank {other.rank}")

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            other = NcPoly.const(self.rank, other)
        self._same(other)
        acc = dict(self.terms)
        for mono, c in other.terms.items():
            if mono in acc:
                s = clean(acc[mono] + c)
                if s:
                    acc[mono] = s
                else:
                    del acc[mono]
            else:
                acc[mono] = c
        return NcPoly._raw(self.rank, acc)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw(self.rank, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            other = NcPoly.const(self.rank, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NcPoly":
        c = clean(c)
        if not c:
            return NcPoly.zero(self.rank)
        return NcPoly(self.rank, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            return self.scale(other)
        self._same(other)
        acc: Dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = m1 + m2
                c = c1 * c2
                acc[mono] = acc[mono] + c if mono in acc else c
        return NcPoly(self.rank, acc)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "NcPoly":
        out = NcPoly.const(self.rank)
        for _ in range(n):
            out = out * self
        return out

    # -- inspection ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.rank == other.rank and self.terms == other.terms
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return self == NcPoly.const(self.rank, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self) -> Iterator[Tuple[Monomial, object]]:
        """Terms in canonical order: by length, then lexicographic."""
        for mono in sorted(self.terms, key=monomial_sort_key):
            yield mono, self.terms[mono]

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    @property
    def coeff_ring(self) -> str:
        if any(isinstance(c, LambdaPoly) for c in self.terms.values()):
            return "lambda"
        return "rational"

    def generators(self) -> set:
        return {g for mono in self.terms for g in mono}

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def map_coefficients(self, f: Callable[[object], object]) -> "NcPoly":
        return NcPoly(self.rank, {m: f(c) for m, c in self.terms.items()})

    def __repr__(self):
        from .io import to_text

        return f"NcPoly(rank={self.rank}, {to_text(self)})"

    def __str__(self):
        from .io import to_text

        return to_text(self)


def add(p: NcPoly, q: NcPoly) -> NcPoly:
    return p + q


def scale(c, p: NcPoly) -> NcPoly:
    return p.scale(c)


def multiply(p: NcPoly, q: NcPoly) -> NcPoly:
    return p * q


def commutator(p: NcPoly, q: NcPoly) -> NcPoly:
    """``pq - qp`` in the free algebra (not normalized)."""
    return p * q - q * p


def bracket(g1: GeneratorId, g2: GeneratorId, rank: int) -> NcPoly:
    """``[g1, g2]`` as a degree-one element."""
    return NcPoly(rank, [((g,), c) for g, c in bracket_terms(g1, g2)])


def anticommutator(p: NcPoly, q: NcPoly) -> NcPoly:
    return p * q + q * p


# ---------------------------------------------------------------------------
# straightening
# ---------------------------------------------------------------------------


class Straightener:
    """PBW normal form with respect to a total order on generators.

    ``key`` maps a generator to a sortable value.  The default is the
    canonical generator order of :func:`spcasimir.lie.list_basis`.
    """

    def __init__(self, key: Optional[Callable[[GeneratorId], Tuple]] = None, name: str = "canonical"):
        self.key = key or (lambda g: g.key)
        self.name = name
        self._insert_cache: Dict[Tuple[Monomial, GeneratorId], Tuple[Tuple[Monomial, int], ...]] = {}
        self._mono_cache: Dict[Monomial, Tuple[Tuple[Monomial, int], ...]] = {}
        self.rewrites = 0

    def clear(self) -> None:
        self._insert_cache.clear()
        self._mono_cache.clear()
        self.rewrites = 0

    def is_normal(self, mono: Monomial) -> bool:
        key = self.key
        return all(key(mono[i]) <= key(mono[i + 1]) for i in range(len(mono) - 1))

    def insert(self, nm: Monomial, g: GeneratorId) -> Tuple[Tuple[Monomial, int], ...]:
        """Normal form of ``nm * g`` for a normal monomial ``nm``."""
        if not nm or self.key(nm[-1]) <= self.key(g):
            return ((nm + (g,), 1),)
        ck = (nm, g)
        hit = self._insert_cache.get(ck)
        if hit is not None:
            return hit
        self.rewrites += 1
        x = nm[-1]
        prefix = nm[:-1]
        acc: Dict[Monomial, int] = {}
        # prefix x g = (prefix g) x + prefix [x, g]
        for t, c in self.insert(prefix, g):
            for t2, c2 in self.insert(t, x):
                acc[t2] = acc.get(t2, 0) + c * c2
        for z, cz in bracket_terms(x, g):
            for t, c in self.insert(prefix, z):
                acc[t] = acc.get(t, 0) + cz * c
        out = tuple((t, c) for t, c in acc.items() if c)
        self._insert_cache[ck] = out
        return out

    def normalize_monomial(self, mono: Monomial) -> Tuple[Tuple[Monomial, int], ...]:
        if len(mono) <= 1 or self.is_normal(mono):
            return ((mono, 1),)
        hit = self._mono_cache.get(mono)
        if hit is not None:
            return hit
        acc: Dict[Monomial, int] = {}
        for t, c in self.normalize_monomial(mono[:-1]):
            for t2, c2 in self.insert(t, mono[-1]):
                acc[t2] = acc.get(t2, 0) + c * c2
        out = tuple((t, c) for t, c in acc.items() if c)
        self._mono_cache[mono] = out
        return out

    def normalize(self, p: NcPoly) -> NcPoly:
        acc: Dict[Monomial, object] = {}
        for mono, c in p.terms.items():
            for t, k in self.normalize_monomial(mono):
                v = c * k
                acc[t] = acc[t] + v if t in acc else v
        return NcPoly(p.rank, acc)


CANONICAL = Straightener()


def pbw_normalize(p: NcPoly) -> NcPoly:
    """Unique PBW representative of ``p`` in the canonical generator order."""
    return CANONICAL.normalize(p)


def is_pbw_normal(p: NcPoly, straightener: Straightener = CANONICAL) -> bool:
    return all(straightener.is_normal(m) for m in p.terms)


# ---------------------------------------------------------------------------
# commutative symbols
# ---------------------------------------------------------------------------

CommMonomial = Tuple[GeneratorId, ...]
CommPoly = Dict[CommMonomial, object]


def commutative_symbol(p: NcPoly, d: int) -> CommPoly:
    """Degree-``d`` part of ``p`` with generators treated as commuting.

    Monomials are returned as sorted generator tuples (multisets).
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    acc: CommPoly = {}
    for mono, c in p.terms.items():
        if len(mono) != d:
            continue
        key = tuple(sorted(mono, key=lambda g: g.key))
        acc[key] = acc[key] + c if key in acc else c
    return {k: clean(v) for k, v in acc.items() if clean(v)}


def comm_multiply(a: CommPoly, b: CommPoly) -> CommPoly:
    acc: CommPoly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            key = tuple(sorted(m1 + m2, key=lambda g: g.key))
            acc[key] = acc[key] + c1 * c2 if key in acc else c1 * c2
    return {k: v for k, v in acc.items() if v}


def proportionality_factor(a: CommPoly, b: CommPoly) -> Optional[Fraction]:
    """``c`` with ``a == c * b`` if one exists, else None (``b`` nonzero)."""
    if not b:
        raise ValueError("reference polynomial is zero")
    if set(a) - set(b):
        return None
    probe = next(iter(b))
    c = Fraction(a.get(probe, 0)) / Fraction(b[probe])
    for k, v in b.items():
        if a.get(k, 0) != c * v:
            return None
    return c
