"""Acceptance gate: one test per criterion, all comparisons exact.

Each test records a ``PASS``/``FAIL`` line with its runtime and budget; the
lines are printed in the terminal summary.
"""

import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES
from spcasimir.casimir import (
    build_reference,
    build_theorem,
    centrality_check,
    rearranged_results,
    rearranged_sides,
    independence_spotcheck,
)
from spcasimir.cli import words_listing
from spcasimir.envelope import NcPoly, pbw_normalize
from spcasimir.io import json_decode, json_encode
from spcasimir.ktype import (
    membership_certificate,
    hw_action_k,
    lw_action_k,
    scalar_identity_sides,
    scalar_ktype_reduce,
    verify_scalar_identities,
)
from spcasimir.lambdapoly import LambdaPoly, lam
from spcasimir.lie import kp_table, structure_selftest
from spcasimir.words import enumerate_words, enumerate_words_claim, parse_word, rotate, sign_exponent, trace, word_sign

DATA = Path(__file__).parent / "data"
PAIRS = [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2)]

# every polynomial produced by criteria 1-10, for the serialization check
PRODUCED = []


@contextmanager
def criterion(number, title, budget):
    state = {"ok": False}
    t = time.perf_counter()
    try:
        yield state
    finally:
        dt = time.perf_counter() - t
        ok = state["ok"] and dt <= budget
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {number:>2}. {title}  ({dt:.2f}s, budget {budget:g}s)")
    assert dt <= budget, f"criterion {number} took {dt:.2f}s, budget {budget}s"


def keep(*polys):
    PRODUCED.extend(polys)
    return polys[0] if len(polys) == 1 else polys


def word_polys():
    return [trace(" ".join(w), 2) for r in (1, 2) for w in enumerate_words(r)]


def test_01_word_counts():
    with criterion(1, "word counts 4^r, r = 1..6", 1) as c:
        for r in range(1, 7):
            assert len(enumerate_words(r)) == 4**r
            assert len(enumerate_words_claim(r)) == 4**r
        c["ok"] = True


def test_02_example_words():
    with criterion(2, "rank-one and rank-two word lists, golden listing", 5) as c:
        assert {"".join(w) for w in enumerate_words(1)} == {"E+E-", "E-E+", "BB", "B*B*"}
        rot = lambda s: {"".join(rotate(parse_word(s), k)) for k in range(4)}  # noqa: E731
        expect = {"E+E-E+E-", "E-E+E-E+", "BBBB", "B*B*B*B*"} | rot("E+E-BB") | rot("E-E+B*B*") | rot("E+B*E-B")
        words = enumerate_words(2)
        assert {"".join(w) for w in words} == expect and len(words) == 16
        assert {"".join(w) for w in words if word_sign(w) == -1} == rot("E+B*E-B")
        for r in (1, 2):
            text, _ = words_listing(r)
            assert text.encode("utf-8") == (DATA / f"words_r{r}.txt").read_bytes()
        keep(*word_polys())
        c["ok"] = True


def test_03_sign_rule():
    with criterion(3, "sign exponents and rotation-parity invariance, length <= 8", 5) as c:
        assert sign_exponent(parse_word("E-BE+B*")) == 1
        assert sign_exponent(parse_word("E-BBE+")) == 2
        assert sign_exponent(parse_word("E+E-BB")) == 2
        for r in range(1, 5):
            for w in enumerate_words(r):
                parity = sign_exponent(w) % 2
                assert all(sign_exponent(rotate(w, k)) % 2 == parity for k in range(2 * r))
        c["ok"] = True


def test_04_structure():
    with criterion(4, "structure self-test and K/P table, m = 1..4", 10) as c:
        for m in range(1, 5):
            report = structure_selftest(m)
            assert report.passed, report.counterexample
            assert all(kp_table(m).values())
        c["ok"] = True


def test_05_oracle_equivalence():
    with criterion(5, "theorem == reference after normalization", 60) as c:
        for m, r in PAIRS:
            a = keep(pbw_normalize(build_theorem(r, m)))
            b = keep(pbw_normalize(build_reference(2 * r, m)))
            assert a == b, (m, r)
        c["ok"] = True


def test_06_centrality():
    with criterion(6, "centrality of D_2r", 300) as c:
        for m, r in PAIRS:
            assert centrality_check(keep(build_theorem(r, m)), m), (m, r)
        c["ok"] = True


def test_07_rearranged_identities():
    with criterion(7, "rearranged C_1, C_2 identities (a)(b)(c) m = 1, 2; (a) m = 3", 60) as c:
        for m in (1, 2):
            assert rearranged_results(m) == {"a": True, "b": True, "c": True}
            for lhs, rhs in rearranged_sides(m).values():
                keep(lhs, rhs)
        assert rearranged_results(3, "a") == {"a": True}
        c["ok"] = True


def test_08_highest_weight():
    with criterion(8, "hw(trace BB) closed form m = 1..4; hw == lw, degree <= 4, m <= 3", 10) as c:
        for m in range(1, 5):
            expect = sum((lam(j) ** 2 + lam(j) * (m + 1 - 2 * j) for j in range(1, m + 1)), LambdaPoly())
            assert hw_action_k(keep(trace("BB", m))) == expect
        for m in (1, 2, 3):
            inputs = [trace(x * n, m) for x in ("B", "B*") for n in range(1, 5)]
            inputs.append(trace("B", m) * trace("BBB", m))
            inputs.append(trace("BB", m) * trace("B*B*", m))
            inputs.append(trace("B", m) ** 4)
            for p in inputs:
                assert hw_action_k(p) == lw_action_k(p)
            keep(*inputs)
        c["ok"] = True


def test_09_scalar_ktype():
    with criterion(9, "scalar K-type C_1, C_2 formulas m = 1, 2; membership certificates", 300) as c:
        for m in (1, 2):
            for lhs, rhs in scalar_identity_sides(m).values():
                assert keep(lhs) == keep(rhs)
            assert verify_scalar_identities(m, max_r=2).passed
            cert = membership_certificate(2, m)
            assert cert is not None and cert.coeffs
            keep(scalar_ktype_reduce(build_theorem(2, m)))
        c["ok"] = True


def test_10_independence():
    with criterion(10, "symbol(D_4) not proportional to symbol(D_2)^2, m = 2, 3", 10) as c:
        for m in (2, 3):
            assert independence_spotcheck(m)
            keep(build_theorem(1, m), build_theorem(2, m))
        c["ok"] = True


def test_11_serialization():
    with criterion(11, "JSON round-trip and byte determinism", 60) as c:
        if not PRODUCED:
            pytest.skip("run together with criteria 1-10")
        kinds = set()
        for p in PRODUCED:
            assert isinstance(p, NcPoly)
            text = json_encode(p)
            back = json_decode(text)
            assert back == p
            assert json_encode(back) == text
            # rebuilding from shuffled terms must not change the bytes
            shuffled = NcPoly(p.rank, list(reversed(list(p.terms.items()))))
            assert json_encode(shuffled) == text
            kinds.add(p.coeff_ring)
        assert kinds == {"rational", "lambda"}
        c["ok"] = True
