import pytest
from hypothesis import given, strategies as st

from spcasimir.envelope import NcPoly
from spcasimir.ktype import (
    WeightError,
    membership_certificate,
    hw_action_k,
    lw_action_k,
    monomial_weight,
    power_trace,
    scalar_identity_sides,
    scalar_ktype_reduce,
    symbolic_weight,
    trace_bb_closed_form,
    verify_scalar_identities,
)
from spcasimir.lambdapoly import LAMBDA, LambdaPoly, lam
from spcasimir.lie import B, Ep
from spcasimir.words import trace

CENTRAL_K = ["B", "B*", "BB", "B*B*", "BBB", "B*B*B*", "BBBB", "B*B*B*B*"]


def test_hw_rank_one():
    # B11 acts by -λ1
    assert hw_action_k(trace("BB", 1)) == lam(1) ** 2
    assert hw_action_k(trace("B", 1)) == -lam(1)


def test_hw_rank_two_by_hand():
    # B11^2 + B22^2 + B12 B21 + B21 B12, and B21 B12 = B12 B21 - B11 + B22
    l1, l2 = lam(1), lam(2)
    assert hw_action_k(trace("BB", 2)) == l1 * l1 + l2 * l2 + l1 - l2


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_hw_closed_form(m):
    expect = sum((lam(j) ** 2 + lam(j) * (m + 1 - 2 * j) for j in range(1, m + 1)), LambdaPoly())
    assert hw_action_k(trace("BB", m)) == expect
    assert trace_bb_closed_form(symbolic_weight(m)) == expect


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("word", CENTRAL_K)
def test_hw_equals_lw(m, word):
    p = trace(word, m)
    assert hw_action_k(p) == lw_action_k(p)


@pytest.mark.parametrize("m", [2, 3])
def test_hw_equals_lw_on_products(m):
    p = trace("B", m) * trace("BBB", m) + trace("BB", m) * trace("B*B*", m)
    assert hw_action_k(p) == lw_action_k(p)


def test_non_central_detects_difference():
    p = NcPoly.gen(B(1, 1), 2)
    assert hw_action_k(p) != lw_action_k(p)


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_numeric_weight_matches_formula(weight):
    assert hw_action_k(trace("BB", 3), weight) == trace_bb_closed_form(weight)


def test_weight_errors():
    with pytest.raises(WeightError):
        hw_action_k(NcPoly.gen(Ep(1, 1), 1))
    with pytest.raises(WeightError):
        hw_action_k(NcPoly.gen(B(1, 2), 2))
    assert monomial_weight((B(1, 2), B(2, 1))) == (0, 0)


def test_scalar_reduce_examples():
    assert scalar_ktype_reduce(trace("B", 3)) == NcPoly.const(3, LAMBDA * -3)
    assert scalar_ktype_reduce(NcPoly.monomial((B(1, 2), B(2, 1)), 2)) == NcPoly.zero(2)
    assert scalar_ktype_reduce(trace("E+E-", 1)) == trace("E+E-", 1)


@pytest.mark.parametrize("m", [1, 2])
def test_scalar_identities(m):
    for name, (lhs, rhs) in scalar_identity_sides(m).items():
        assert lhs == rhs, name


@pytest.mark.parametrize("m", [1, 2])
def test_verify_scalar_identities(m):
    report = verify_scalar_identities(m, max_r=2)
    assert report.passed, report.first_failure
    assert set(report.results) == {"a", "b", "c1", "c2"}


# residual = 2 red(C_2) - 2 red(T_2), expanded by hand from the C_2 formula
CERTS = {
    1: {(): 2 * LAMBDA**4 + 8 * LAMBDA**3 + 16 * LAMBDA**2 + 16 * LAMBDA,
        (1,): 4 * LAMBDA**2 + 8 * LAMBDA + 8},
    2: {(): 4 * LAMBDA**4 + 24 * LAMBDA**3 + 72 * LAMBDA**2 + 108 * LAMBDA,
        (1,): 4 * LAMBDA**2 + 12 * LAMBDA + 18},
}


@pytest.mark.parametrize("m", [1, 2])
def test_membership_certificate(m):
    cert = membership_certificate(2, m)
    assert cert is not None
    assert cert.coeffs == CERTS[m]


def test_membership_degree_two_is_trivial():
    cert = membership_certificate(1, 2)
    assert cert is not None
    # reduce(D_2) - 2 reduce(T_1) is a λ-polynomial times 1
    assert set(cert.coeffs) <= {()}


def test_power_trace():
    assert power_trace(2, 1) == trace("E+E-E+E-", 1)
