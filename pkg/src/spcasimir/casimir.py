"""Casimir elements of sp_m(C), built two independent ways.

``build_theorem`` sums signed formal traces of admissible words;
``build_reference`` evaluates the classical sum over all basis tuples,
``sum trace(X_1 ... X_n) X_1^* ... X_n^*``, with exact matrix traces.
"""

from __future__ import annotations

import os
from itertools import product
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .envelope import (
    NcPoly,
    anticommutator,
    comm_multiply,
    commutative_symbol,
    commutator,
    pbw_normalize,
    proportionality_factor,
)
from .lie import (
    B,
    Em,
    Ep,
    GaussMatrix,
    GeneratorId,
    check_rank,
    dual,
    list_basis,
    realize,
    trace_of_product,
)
from .words import enumerate_words, letter_generator, trace, trace_expand, word_sign


class ImaginaryCoefficientError(AssertionError):
    """A reference Casimir came out with a non-real coefficient."""


def reference_tuple_count(n: int, m: int) -> int:
    return (2 * m * m + m) ** n


def build_theorem(r: int, m: int) -> NcPoly:
    """Signed sum of formal traces over admissible words of length ``2r``."""
    check_rank(m)
    acc: Dict[Tuple[GeneratorId, ...], int] = {}
    for w in enumerate_words(r):
        s = word_sign(w)
        for mono, c in trace_expand(w, m).terms.items():
            acc[mono] = acc.get(mono, 0) + s * c
    return NcPoly(m, acc)


def _reference_chunk(n: int, m: int, firsts: Sequence[int]) -> Dict[Tuple[GeneratorId, ...], Tuple[Fraction, Fraction]]:
    basis = list_basis(m)
    mats = [realize(g, m) for g in basis]
    duals = [dual(g) for g in basis]
    acc: Dict[Tuple[GeneratorId, ...], List[Fraction]] = {}

    def emit(idx: Tuple[int, ...], tr) -> None:
        if not tr:
            return
        scale = Fraction(1)
        mono = []
        for i in idx:
            c, h = duals[i]
            scale *= c
            mono.append(h)
        key = tuple(mono)
        slot = acc.get(key)
        if slot is None:
            acc[key] = [tr.re * scale, tr.im * scale]
        else:
            slot[0] += tr.re * scale
            slot[1] += tr.im * scale

    def rec(idx: Tuple[int, ...], prefix: GaussMatrix) -> None:
        if len(idx) == n - 1:
            for j, x in enumerate(mats):
                emit(idx + (j,), trace_of_product(prefix, x))
            return
        for j, x in enumerate(mats):
            nxt = prefix @ x
            if not nxt.is_zero():
                rec(idx + (j,), nxt)

    for i in firsts:
        if n == 1:
            emit((i,), mats[i].trace())
        else:
            rec((i,), mats[i])
    return {k: (v[0], v[1]) for k, v in acc.items()}


def build_reference(n: int, m: int, threads: int = 1) -> NcPoly:
    """Classical Casimir of degree ``n`` from the matrix realization.

    Raises :class:`ImaginaryCoefficientError` if an aggregated coefficient
    has a nonzero imaginary part.
    """
    check_rank(m)
    if n < 1:
        raise ValueError("degree must be >= 1")
    dim = len(list_basis(m))
    if threads > 1 and dim > 1:
        chunks = [list(range(i, dim, threads)) for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(_reference_chunk, [n] * threads, [m] * threads, chunks))
    else:
        parts = [_reference_chunk(n, m, range(dim))]
    re: Dict[Tuple[GeneratorId, ...], Fraction] = {}
    im: Dict[Tuple[GeneratorId, ...], Fraction] = {}
    for part in parts:
        for k, (a, b) in part.items():
            re[k] = re.get(k, Fraction(0)) + a
            im[k] = im.get(k, Fraction(0)) + b
    bad = [k for k, v in im.items() if v]
    if bad:
        mono = " ".join(str(g) for g in bad[0])
        raise ImaginaryCoefficientError(f"coefficient of {mono} is not real: {im[bad[0]]}i")
    return NcPoly(m, re)


def _undual(h: GeneratorId) -> Tuple[GeneratorId, Fraction]:
    # the basis vector whose dual is (scale * h)
    if h.kind == "B":
        g = B(h.l, h.k)
    else:
        g = GeneratorId("E-" if h.kind == "E+" else "E+", h.k, h.l)
    c, back = dual(g)
    assert back == h
    return g, c


def reference_coefficient(mono: Sequence[GeneratorId], m: int):
    """Coefficient of one monomial in ``build_reference(len(mono), m)``.

    The dual map is a bijection on the basis, so exactly one tuple
    contributes and a single matrix trace suffices.
    """
    mat = GaussMatrix.identity(2 * m)
    scale = Fraction(1)
    for h in mono:
        g, c = _undual(h)
        scale *= c
        mat = mat @ realize(g, m)
    return mat.trace() * scale


def generic_monomial(w: Sequence[str]) -> Tuple[GeneratorId, ...]:
    """Term of ``trace(w)`` at rank ``len(w)`` with indices 1, 2, ..., n around the cycle."""
    n = len(w)
    return tuple(letter_generator(w[t], t + 1, (t + 1) % n + 1) for t in range(n))


def index_cycles(w: Sequence[str], mono: Sequence[GeneratorId], m: int) -> int:
    """Number of cyclic index tuples for which ``trace(w)`` yields ``mono``."""
    n = len(w)
    idx = range(1, m + 1)
    count = 0
    for j0 in idx:
        j = j0
        for t in range(n):
            nxt = [c for c in idx if letter_generator(w[t], j, c) == mono[t]]
            if len(nxt) != 1:
                break
            j = nxt[0]
        else:
            count += j == j0
    return count


def oracle_word_sign(w: Sequence[str]) -> int:
    """Sign of ``trace(w)`` inside the classical Casimir, read off one matrix trace.

    Uses the term of ``w`` whose indices run 1, 2, ..., n around the cycle.
    From length 4 on no other admissible word produces that term; for
    length 2 the reversed cycle of a second word does, and the signs of all
    contributing words are solved for jointly (each is +1 or -1).
    """
    n = len(w)
    mono = generic_monomial(w)
    c = reference_coefficient(mono, n)
    if c.im:
        raise ArithmeticError(f"non-real reference coefficient {c} for {' '.join(w)}")
    contributors = [
        (w2, k) for w2 in enumerate_words(n // 2) if (k := index_cycles(w2, mono, n))
    ]
    mine = [i for i, (w2, _) in enumerate(contributors) if tuple(w2) == tuple(w)]
    solutions = set()
    for signs in product((1, -1), repeat=len(contributors)):
        if sum(s * k for s, (_, k) in zip(signs, contributors)) == c.re:
            solutions.add(signs[mine[0]])
    if len(solutions) != 1:
        raise ArithmeticError(f"reference coefficient {c} does not fix the sign of {' '.join(w)}")
    return solutions.pop()


def centrality_defects(p: NcPoly, m: int) -> List[GeneratorId]:
    """Generators ``X`` for which ``[p, X]`` does not normalize to zero."""
    if p.rank != m:
        raise ValueError(f"polynomial has rank {p.rank}, expected {m}")
    q = pbw_normalize(p)
    out = []
    for g in list_basis(m):
        if pbw_normalize(commutator(q, NcPoly.gen(g, m))):
            out.append(g)
    return out


def _defects_for(args):
    p, m, gens = args
    q = pbw_normalize(p)
    return [g for g in gens if pbw_normalize(commutator(q, NcPoly.gen(g, m)))]


def centrality_check(p: NcPoly, m: int, threads: int = 1) -> bool:
    """True iff ``p`` commutes with every generator in U(g)."""
    if threads <= 1:
        return not centrality_defects(p, m)
    basis = list(list_basis(m))
    chunks = [(p, m, basis[i::threads]) for i in range(threads)]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return not any(ex.map(_defects_for, chunks))


def oracle_equivalent(r: int, m: int, threads: int = 1) -> bool:
    return pbw_normalize(build_theorem(r, m)) == pbw_normalize(build_reference(2 * r, m, threads))


# ---------------------------------------------------------------------------
# rearranged forms of the first two Casimirs
# ---------------------------------------------------------------------------


def anticommutator_term(m: int) -> NcPoly:
    """``sum_{ijkl} {E+_kl, E-_ij} B_jk B_il``."""
    acc = NcPoly.zero(m)
    idx = range(1, m + 1)
    for i in idx:
        for j in idx:
            for k in idx:
                for l in idx:
                    ep = NcPoly.gen(Ep(k, l), m)
                    em = NcPoly.gen(Em(i, j), m)
                    tail = NcPoly.monomial((B(j, k), B(i, l)), m)
                    acc = acc + anticommutator(ep, em) * tail
    return acc


def rearranged_sides(m: int) -> Dict[str, Tuple[NcPoly, NcPoly]]:
    """The three identities as (left, right) pairs, not yet normalized."""
    check_rank(m)
    T = lambda s: trace(s, m)  # noqa: E731
    half = Fraction(1, 2)
    sym2 = (T("E+E-") + T("E-E+")).scale(half)
    a = (sym2, T("E+E-") - T("B").scale(m + 1))

    sym4 = (T("E+E-E+E-") + T("E-E+E-E+")).scale(half)
    b_rhs = (
        T("E+E-E+E-")
        - (T("E+E-") + T("E-E+")).scale(half) * T("B")
        - (T("E+E-B") + T("E-E+B*")).scale(Fraction(m + 2, 2))
    )
    b = (sym4, b_rhs)

    c2 = build_theorem(2, m).scale(half)
    c_rhs = (
        (T("E+E-E+E-") + T("E-E+E-E+") + T("BBBB") + T("B*B*B*B*")).scale(half)
        + (T("E+E-BB") + T("E-E+B*B*")).scale(2)
        - anticommutator_term(m)
        + (T("E+E-") + T("E-E+")).scale(Fraction((m + 1) ** 2, 2))
    )
    c = (c2, c_rhs)
    return {"a": a, "b": b, "c": c}


def rearranged_results(m: int, parts: str = "abc") -> Dict[str, bool]:
    sides = rearranged_sides(m)
    return {k: pbw_normalize(sides[k][0]) == pbw_normalize(sides[k][1]) for k in parts}


def rearranged_check(m: int, parts: str = "abc") -> bool:
    return all(rearranged_results(m, parts).values())


def casimir_c1(m: int) -> NcPoly:
    return build_theorem(1, m).scale(Fraction(1, 2))


def casimir_c2(m: int) -> NcPoly:
    return build_theorem(2, m).scale(Fraction(1, 2))


# ---------------------------------------------------------------------------
# independence of D_4 from D_2 (top-degree symbols)
# ---------------------------------------------------------------------------


@dataclass
class IndependenceReport:
    rank: int
    independent: bool
    factor: Optional[Fraction] = None
    symbol_sizes: Tuple[int, int] = field(default=(0, 0))


def independence_report(m: int) -> IndependenceReport:
    check_rank(m)
    if m < 2:
        raise ValueError("independence spot-check needs rank >= 2")
    s2 = commutative_symbol(build_theorem(1, m), 2)
    s4 = commutative_symbol(build_theorem(2, m), 4)
    sq = comm_multiply(s2, s2)
    c = proportionality_factor(s4, sq)
    return IndependenceReport(m, c is None, c, (len(s2), len(s4)))


def independence_spotcheck(m: int) -> bool:
    """True iff symbol(D_4) is not a rational multiple of symbol(D_2)^2."""
    return independence_report(m).independent


def default_threads() -> int:
    env = os.environ.get("CASIMIR_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


corollary3_check = rearranged_check
