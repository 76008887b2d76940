from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spcasimir.envelope import (
    CANONICAL,
    NcPoly,
    RankMismatchError,
    Straightener,
    commutative_symbol,
    commutator,
    is_pbw_normal,
    pbw_normalize,
    proportionality_factor,
)
from spcasimir.lambdapoly import LAMBDA, LambdaPoly
from spcasimir.lie import B, Em, Ep

from strategies import evaluate, monomials, ncpolys


def mono(*gens, m=1, c=1):
    return NcPoly.monomial(gens, m, c)


def test_swap_e_minus_e_plus():
    # [E-11, E+11] = -4 B11
    got = pbw_normalize(mono(Em(1, 1), Ep(1, 1)))
    assert got == mono(Ep(1, 1), Em(1, 1)) - mono(B(1, 1), c=4)


def test_swap_b_e_plus():
    # [B11, E+11] = 2 E+11
    got = pbw_normalize(mono(B(1, 1), Ep(1, 1)))
    assert got == mono(Ep(1, 1), B(1, 1)) + mono(Ep(1, 1), c=2)


def test_normal_monomial_unchanged():
    p = mono(Ep(1, 1), Ep(1, 2), Em(2, 2), B(1, 2), B(1, 1), B(2, 1), m=2)
    assert pbw_normalize(p) == p
    assert is_pbw_normal(p)


def test_degree_three_straightening():
    # E- E- E+ = E+ E- E- - 4 B E- - 4 E- B and B E- = E- B - 2 E-
    p = pbw_normalize(mono(Em(1, 1), Em(1, 1), Ep(1, 1)))
    expect = (
        mono(Ep(1, 1), Em(1, 1), Em(1, 1))
        - mono(Em(1, 1), B(1, 1), c=8)
        + mono(Em(1, 1), c=8)
    )
    assert p == expect


def test_rank_mismatch():
    with pytest.raises(RankMismatchError):
        NcPoly.const(1) + NcPoly.const(2)


def test_lambda_coefficients_survive_normalization():
    p = mono(Em(1, 1), Ep(1, 1)).scale(LAMBDA)
    q = pbw_normalize(p)
    assert q.coeff_ring == "lambda"
    assert q.terms[(B(1, 1),)] == LAMBDA * -4


def test_constant_lambda_collapses():
    p = NcPoly.const(1, LambdaPoly.const(3))
    assert p.coeff_ring == "rational"
    assert p == NcPoly.const(1, 3)


def test_rewrite_counter():
    s = Straightener()
    s.normalize(mono(B(1, 1), Ep(1, 1)))
    first = s.rewrites
    assert first > 0
    s.normalize(mono(B(1, 1), Ep(1, 1)))
    assert s.rewrites == first
    s.clear()
    assert s.rewrites == 0


@given(ncpolys(2))
def test_idempotent(p):
    q = pbw_normalize(p)
    assert pbw_normalize(q) == q
    assert is_pbw_normal(q)


@given(ncpolys(2), ncpolys(2))
def test_multiplicative(p, q):
    lhs = pbw_normalize(p * q)
    rhs = pbw_normalize(pbw_normalize(p) * pbw_normalize(q))
    assert lhs == rhs


@given(ncpolys(2))
def test_normalization_preserves_matrix_image(p):
    # the defining representation factors through U(g)
    assert evaluate(pbw_normalize(p)) == evaluate(p)


@given(ncpolys(1, max_terms=2, max_len=3), ncpolys(1, max_terms=2, max_len=3), ncpolys(1, max_terms=2, max_len=3))
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(monomials(2, 3), st.integers(min_value=0, max_value=2))
def test_linear(mn, k):
    p = NcPoly.monomial(mn, 2)
    assert pbw_normalize(p.scale(k) + p) == pbw_normalize(p).scale(k + 1)


def test_alternative_order_agrees_in_u_g():
    rev = Straightener(lambda g: tuple(-x for x in g.key), name="reversed")
    p = mono(Em(1, 2), Ep(2, 2), B(2, 1), B(1, 2), m=2)
    assert evaluate(rev.normalize(p)) == evaluate(CANONICAL.normalize(p))
    assert pbw_normalize(rev.normalize(p)) == pbw_normalize(p)


def test_commutative_symbol_and_proportionality():
    p = mono(Em(1, 1), Ep(1, 1)) + mono(B(1, 1))
    s = commutative_symbol(p, 2)
    assert s == {(Ep(1, 1), Em(1, 1)): 1}
    assert proportionality_factor({k: 3 * v for k, v in s.items()}, s) == 3
    assert proportionality_factor({(B(1, 1),): Fraction(1)}, s) is None


def test_commutator_of_generators():
    c = pbw_normalize(commutator(NcPoly.gen(Ep(1, 1), 1), NcPoly.gen(Em(1, 1), 1)))
    assert c == mono(B(1, 1), c=4)


def test_bracket_matches_commutator():
    from spcasimir.envelope import bracket
    from spcasimir.lie import list_basis

    for g1 in list_basis(2):
        for g2 in list_basis(2):
            c = commutator(NcPoly.gen(g1, 2), NcPoly.gen(g2, 2))
            assert pbw_normalize(c) == pbw_normalize(bracket(g1, g2, 2))
