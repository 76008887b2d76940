"""Action on K-types: highest/lowest weight evaluation and scalar-type reduction.

Under ``J: k -> gl_m`` the generator ``B_jk`` goes to ``-e_kj``.  Hence on a
highest weight vector of weight ``(λ_1, ..., λ_m)`` the lowering generators
``B_jk`` (``j > k``) act by zero and ``B_jj`` acts by ``-λ_j``.  On a scalar
K-type ``(λ, ..., λ)`` every ``B_jk`` acts by ``-λ δ_jk``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from .casimir import build_theorem, casimir_c1, casimir_c2
from .envelope import CANONICAL, Monomial, NcPoly, Straightener, pbw_normalize
from .lambdapoly import LAMBDA, LambdaPoly, clean, lam
from .lie import GeneratorId, check_rank
from .words import trace

WeightVector = Sequence[object]


class WeightError(ValueError):
    pass


def symbolic_weight(m: int) -> Tuple[LambdaPoly, ...]:
    """``(λ_1, ..., λ_m)``."""
    return tuple(lam(j) for j in range(1, check_rank(m) + 1))


def scalar_weight(m: int, value=LAMBDA) -> Tuple[object, ...]:
    """``(λ, ..., λ)``, or a numeric scalar type."""
    return (value,) * check_rank(m)


def monomial_weight(mono: Monomial, m: Optional[int] = None) -> Tuple[int, ...]:
    """Sum of ``e_j - e_k`` over the factors ``B_jk``."""
    if any(not g.is_b for g in mono):
        raise WeightError("weights are only defined for monomials in B")
    if m is None:
        m = max((max(g.k, g.l) for g in mono), default=0)
    w = [0] * m
    for g in mono:
        w[g.k - 1] += 1
        w[g.l - 1] -= 1
    return tuple(w)


def _lowest_key(g: GeneratorId) -> Tuple:
    # lowering, diagonal, raising: raising generators kill a lowest weight vector
    if not g.is_b:
        return g.key
    if g.k > g.l:
        return (2, g.k, g.l)
    if g.k == g.l:
        return (3, g.k, g.k)
    return (4, g.k, g.l)


LOWEST = Straightener(_lowest_key, name="lowest")


def _check_b_only(p: NcPoly) -> None:
    for mono in p.terms:
        if any(not g.is_b for g in mono):
            raise WeightError("expected a polynomial in the B generators only")
        if any(monomial_weight(mono, p.rank)):
            names = " ".join(str(g) for g in mono)
            raise WeightError(f"monomial {names} has nonzero weight")


def _evaluate(p: NcPoly, weight: WeightVector, straightener: Straightener, kills) -> object:
    _check_b_only(p)
    if len(weight) != p.rank:
        raise WeightError(f"weight has {len(weight)} entries, rank is {p.rank}")
    q = straightener.normalize(p)
    total = LambdaPoly()
    for mono, c in q.terms.items():
        if any(kills(g) for g in mono):
            continue
        value = LambdaPoly.coerce(c) if not isinstance(c, LambdaPoly) else c
        for g in mono:
            if g.k != g.l:
                raise WeightError(f"unexpected off-diagonal survivor {g}")
            value = value * (-LambdaPoly.coerce(weight[g.k - 1]))
        total = total + value
    return clean(total)


def hw_action_k(p: NcPoly, weight: Optional[WeightVector] = None):
    """Scalar by which a weight-zero element of U(k) acts on a highest weight vector."""
    if weight is None:
        weight = symbolic_weight(p.rank)
    return _evaluate(p, weight, CANONICAL, lambda g: g.k > g.l)


def lw_action_k(p: NcPoly, weight: Optional[WeightVector] = None, lowest: Optional[WeightVector] = None):
    """Same evaluation on a lowest weight vector.

    ``weight`` is the highest weight of the K-type; the lowest weight vector
    then has weight ``reversed(weight)`` unless ``lowest`` is given.
    Raising generators ``B_jk`` (``j < k``) act by zero on it.
    """
    if weight is None:
        weight = symbolic_weight(p.rank)
    if lowest is None:
        lowest = tuple(reversed(tuple(weight)))
    return _evaluate(p, lowest, LOWEST, lambda g: g.k < g.l)


def trace_bb_closed_form(weight: WeightVector):
    """``sum_j λ_j^2 + (m + 1 - 2j) λ_j``."""
    m = len(weight)
    total = LambdaPoly()
    for j, x in enumerate(weight, start=1):
        x = LambdaPoly.coerce(x)
        total = total + x * x + x * (m + 1 - 2 * j)
    return clean(total)


def scalar_ktype_reduce(p: NcPoly, m: Optional[int] = None, value=LAMBDA) -> NcPoly:
    """Collect B's on the right, then let them act on the scalar K-type.

    Returns a polynomial in the E generators only.
    """
    m = p.rank if m is None else m
    if p.rank != m:
        raise ValueError(f"polynomial has rank {p.rank}, expected {m}")
    minus = -LambdaPoly.coerce(value)
    q = pbw_normalize(p)
    acc: Dict[Monomial, object] = {}
    for mono, c in q.terms.items():
        cut = len(mono)
        while cut and mono[cut - 1].is_b:
            cut -= 1
        tail = mono[cut:]
        if any(g.k != g.l for g in tail):
            continue
        head = mono[:cut]
        if any(g.is_b for g in head):
            raise AssertionError("normal monomial with a B before an E")
        v = LambdaPoly.coerce(c) if not isinstance(c, LambdaPoly) else c
        if tail:
            v = v * minus ** len(tail)
        acc[head] = acc[head] + v if head in acc else v
    return NcPoly(m, acc)


# ---------------------------------------------------------------------------
# scalar K-type identities
# ---------------------------------------------------------------------------


def power_trace(s: int, m: int) -> NcPoly:
    """``trace((E+ E-)^s)``."""
    return trace("E+E-" * s, m)


@dataclass
class MembershipCertificate:
    """``residual == sum(coeffs[parts] * reduce(prod trace((E+E-)^s) for s in parts))``."""

    rank: int
    r: int
    coeffs: Dict[Tuple[int, ...], LambdaPoly] = field(default_factory=dict)

    def __str__(self):
        items = []
        for parts, c in sorted(self.coeffs.items()):
            name = "·".join(f"T{s}" for s in parts) or "1"
            items.append(f"({c})·{name}")
        return " + ".join(items) or "0"


def _partitions(total: int, max_part: int) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = [()]
    for n in range(1, total + 1):
        for parts in combinations_with_replacement(range(1, max_part + 1), n):
            if sum(parts) <= total:
                out.append(parts)
    return out


def _lambda_degree(p: NcPoly) -> int:
    return max((LambdaPoly.coerce(c).degree() for c in p.terms.values()), default=0)


def membership_certificate(r: int, m: int, value=LAMBDA) -> Optional[MembershipCertificate]:
    """Write ``reduce(D_2r) - 2 reduce(trace((E+E-)^r))`` through lower power traces.

    Candidates are ``reduce(T_{s_1} ... T_{s_k})`` with all ``s_i < r`` and
    ``sum s_i <= r``; their coefficients are λ-polynomials found by exact
    linear solving.  Returns None if no combination exists.
    """
    check_rank(m)
    residual = scalar_ktype_reduce(build_theorem(r, m), m, value) - scalar_ktype_reduce(
        power_trace(r, m), m, value
    ).scale(2)
    cands: Dict[Tuple[int, ...], NcPoly] = {}
    for parts in _partitions(r, r - 1):
        prod = NcPoly.const(m)
        for s in parts:
            prod = prod * power_trace(s, m)
        cands[parts] = scalar_ktype_reduce(prod, m, value)
    deg = _lambda_degree(residual) + max(_lambda_degree(c) for c in cands.values())

    # unknown (parts, d) is the coefficient of λ^d in coeffs[parts]
    unknowns = [(parts, d) for parts in cands for d in range(deg + 1)]
    rows: Dict[Tuple[Monomial, int], Dict[int, Fraction]] = {}
    for col, (parts, d) in enumerate(unknowns):
        for mono, c in cands[parts].terms.items():
            for e, v in LambdaPoly.coerce(c).terms.items():
                power = (e[0] if e else 0) + d
                rows.setdefault((mono, power), {})[col] = v
    rhs: Dict[Tuple[Monomial, int], Fraction] = {}
    for mono, c in residual.terms.items():
        for e, v in LambdaPoly.coerce(c).terms.items():
            rhs[(mono, e[0] if e else 0)] = v
            rows.setdefault((mono, e[0] if e else 0), {})
    keys = list(rows)
    A = sympy.zeros(len(keys), len(unknowns))
    b = sympy.zeros(len(keys), 1)
    for i, key in enumerate(keys):
        for col, v in rows[key].items():
            A[i, col] = sympy.Rational(v.numerator, v.denominator)
        v = rhs.get(key, Fraction(0))
        b[i, 0] = sympy.Rational(v.numerator, v.denominator)
    try:
        sol, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    sol = sol.subs({t: 0 for t in params})

    cert = MembershipCertificate(m, r)
    for col, (parts, d) in enumerate(unknowns):
        v = sol[col, 0]
        if v:
            q = Fraction(int(v.p), int(v.q))
            cert.coeffs[parts] = cert.coeffs.get(parts, LambdaPoly()) + LambdaPoly({(d,): q})
    cert.coeffs = {k: v for k, v in cert.coeffs.items() if v}

    check = NcPoly.zero(m)
    for parts, c in cert.coeffs.items():
        check = check + cands[parts].scale(c)
    if check != residual:
        raise AssertionError("membership certificate does not reproduce the residual")
    return cert


def scalar_identity_sides(m: int, value=LAMBDA) -> Dict[str, Tuple[NcPoly, NcPoly]]:
    """Reduced left and right sides of the C_1 and C_2 formulas on a scalar K-type."""
    check_rank(m)
    x = LambdaPoly.coerce(value)
    red = lambda p: scalar_ktype_reduce(p, m, value)  # noqa: E731
    t1 = red(power_trace(1, m))
    t2 = red(power_trace(2, m))
    one = NcPoly.const(m)
    a = (red(casimir_c1(m)), t1 + one.scale(x * m * (x + m + 1)))
    factor = x * x * 2 + x * (2 * (m + 1)) + (m + 1) ** 2
    b = (
        red(casimir_c2(m)),
        t2 + one.scale(x ** 4 * m) + (t1 + one.scale(x * m * (m + 1))).scale(factor),
    )
    return {"a": a, "b": b}


@dataclass
class ScalarIdentityReport:
    rank: int
    results: Dict[str, bool] = field(default_factory=dict)
    certificates: Dict[int, Optional[MembershipCertificate]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    @property
    def first_failure(self) -> Optional[str]:
        return next((k for k, v in self.results.items() if not v), None)

    def __bool__(self):
        return self.passed


def verify_scalar_identities(m: int, max_r: int = 2, value=LAMBDA) -> ScalarIdentityReport:
    report = ScalarIdentityReport(m)
    for name, (lhs, rhs) in scalar_identity_sides(m, value).items():
        report.results[name] = lhs == rhs
    for r in range(1, max_r + 1):
        cert = membership_certificate(r, m, value)
        report.certificates[r] = cert
        report.results[f"c{r}"] = cert is not None
    return report
