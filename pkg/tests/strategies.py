"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from spcasimir.envelope import NcPoly
from spcasimir.lie import GaussMatrix, list_basis, realize

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def monomials(m, max_len=4):
    return st.lists(st.sampled_from(list_basis(m)), min_size=0, max_size=max_len).map(tuple)


def ncpolys(m, max_terms=3, max_len=4):
    return st.dictionaries(monomials(m, max_len), small_fractions, max_size=max_terms).map(
        lambda d: NcPoly(m, d)
    )


def evaluate(p: NcPoly) -> GaussMatrix:
    """Image of ``p`` under the defining representation ``U(g) -> M_2m``."""
    n = 2 * p.rank
    out = GaussMatrix(n)
    for mono, c in p.terms.items():
        mat = GaussMatrix.identity(n)
        for g in mono:
            mat = mat @ realize(g, p.rank)
        out = out + mat.scale(Fraction(c))
    return out
