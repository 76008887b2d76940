"""Basis, brackets, invariant form and exact matrix realization of sp_m(C).

The complexified algebra is split as k + p_+ + p_- with the basis

    E_{+kl} = E_{+lk}   (p_+, X = (e_kl + e_lk)/2)
    E_{-kl} = E_{-lk}   (p_-)
    B_{kl}              (k, all ordered pairs)

Generators are ordered once and for all (see :func:`list_basis`); that order
is the one used for PBW straightening in :mod:`spcasimir.envelope`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, total_ordering
from itertools import product
from typing import Dict, Iterable, List, Sequence, Tuple

EPLUS = "E+"
EMINUS = "E-"
BGEN = "B"
KINDS = (EPLUS, EMINUS, BGEN)


class InvalidRankError(ValueError):
    pass


class IndexRangeError(ValueError):
    pass


def check_rank(m: int) -> int:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InvalidRankError(f"rank must be a positive integer, got {m!r}")
    return m


def _order_key(kind: str, k: int, l: int) -> Tuple[int, ...]:
    if kind == EPLUS:
        return (0, k, l)
    if kind == EMINUS:
        return (1, k, l)
    # raising (k < l), then diagonal, then lowering (k > l)
    if k < l:
        return (2, k, l)
    if k == l:
        return (3, k, k)
    return (4, k, l)


@total_ordering
@dataclass(frozen=True)
class GeneratorId:
    """One basis vector of sp_m(C).

    E-type generators are symmetric in their indices and are stored with
    ``k <= l``; B generators keep the ordered pair.  Comparison follows the
    canonical generator order, which does not depend on the rank.
    """

    kind: str
    k: int
    l: int
    key: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.k < 1 or self.l < 1:
            raise IndexRangeError(f"indices must be >= 1: {self.k}, {self.l}")
        if self.kind != BGEN and self.k > self.l:
            k, l = self.l, self.k
            object.__setattr__(self, "k", k)
            object.__setattr__(self, "l", l)
        object.__setattr__(self, "key", _order_key(self.kind, self.k, self.l))

    def __lt__(self, other: "GeneratorId") -> bool:
        return self.key < other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __str__(self) -> str:
        return f"{self.kind}[{self.k},{self.l}]"

    @property
    def is_b(self) -> bool:
        return self.kind == BGEN

    def check_range(self, m: int) -> None:
        if self.k > m or self.l > m:
            raise IndexRangeError(f"{self} is out of range for rank {m}")


def Ep(k: int, l: int) -> GeneratorId:
    return GeneratorId(EPLUS, k, l)


def Em(k: int, l: int) -> GeneratorId:
    return GeneratorId(EMINUS, k, l)


def B(k: int, l: int) -> GeneratorId:
    return GeneratorId(BGEN, k, l)


@lru_cache(maxsize=None)
def list_basis(m: int) -> Tuple[GeneratorId, ...]:
    """All ``2m^2 + m`` generators of rank ``m`` in canonical order."""
    check_rank(m)
    idx = range(1, m + 1)
    eplus = [Ep(k, l) for k in idx for l in idx if k <= l]
    eminus = [Em(k, l) for k in idx for l in idx if k <= l]
    raising = [B(j, k) for j in idx for k in idx if j < k]
    diagonal = [B(j, j) for j in idx]
    lowering = [B(j, k) for j in idx for k in idx if j > k]
    return tuple(eplus + eminus + raising + diagonal + lowering)


# ---------------------------------------------------------------------------
# exact Gaussian rationals and matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        return cls(Fraction(x), Fraction(0))

    def __add__(self, other):
        o = GaussRational.coerce(other)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussRational.coerce(other))

    def __rsub__(self, other):
        return GaussRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussRational.coerce(other)
        return GaussRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = GaussRational.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


I_UNIT = GaussRational(0, 1)
ZERO = GaussRational()
ONE = GaussRational(1)


class GaussMatrix:
    """Dense square matrix over the Gaussian rationals.

    Entries are kept as ``(re, im)`` pairs of Fractions internally so that
    products stay reasonably fast; :meth:`__getitem__` hands out
    :class:`GaussRational` values.
    """

    __slots__ = ("n", "_re", "_im")

    def __init__(self, n: int, re=None, im=None):
        self.n = n
        self._re = re if re is not None else [[Fraction(0)] * n for _ in range(n)]
        self._im = im if im is not None else [[Fraction(0)] * n for _ in range(n)]

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence]) -> "GaussMatrix":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        g = [[GaussRational.coerce(x) for x in r] for r in rows]
        return cls(n, [[x.re for x in r] for r in g], [[x.im for x in r] for r in g])

    @classmethod
    def identity(cls, n: int) -> "GaussMatrix":
        out = cls(n)
        for i in range(n):
            out._re[i][i] = Fraction(1)
        return out

    def __getitem__(self, ij: Tuple[int, int]) -> GaussRational:
        i, j = ij
        return GaussRational(self._re[i][j], self._im[i][j])

    def rows(self) -> List[List[GaussRational]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def _check(self, other: "GaussMatrix") -> None:
        if not isinstance(other, GaussMatrix) or other.n != self.n:
            raise ValueError("dimension mismatch")

    def __add__(self, other: "GaussMatrix") -> "GaussMatrix":
        self._check(other)
        n = self.n
        return GaussMatrix(
            n,
            [[self._re[i][j] + other._re[i][j] for j in range(n)] for i in range(n)],
            [[self._im[i][j] + other._im[i][j] for j in range(n)] for i in range(n)],
        )

    def __neg__(self) -> "GaussMatrix":
        return self.scale(-1)

    def __sub__(self, other: "GaussMatrix") -> "GaussMatrix":
        return self + (-other)

    def scale(self, c) -> "GaussMatrix":
        c = GaussRational.coerce(c)
        a, b = c.re, c.im
        n = self.n
        re = [[a * self._re[i][j] - b * self._im[i][j] for j in range(n)] for i in range(n)]
        im = [[a * self._im[i][j] + b * self._re[i][j] for j in range(n)] for i in range(n)]
        return GaussMatrix(n, re, im)

    def __matmul__(self, other: "GaussMatrix") -> "GaussMatrix":
        self._check(other)
        n = self.n
        re = [[Fraction(0)] * n for _ in range(n)]
        im = [[Fraction(0)] * n for _ in range(n)]
        ore, oim = other._re, other._im
        for i in range(n):
            sre, sim = self._re[i], self._im[i]
            rre, rim = re[i], im[i]
            for t in range(n):
                a, b = sre[t], sim[t]
                if not a and not b:
                    continue
                pre, pim = ore[t], oim[t]
                for j in range(n):
                    c, d = pre[j], pim[j]
                    if c or d:
                        rre[j] += a * c - b * d
                        rim[j] += a * d + b * c
        return GaussMatrix(n, re, im)

    def transpose(self) -> "GaussMatrix":
        n = self.n
        return GaussMatrix(
            n,
            [[self._re[j][i] for j in range(n)] for i in range(n)],
            [[self._im[j][i] for j in range(n)] for i in range(n)],
        )

    def trace(self) -> GaussRational:
        return GaussRational(
            sum((self._re[i][i] for i in range(self.n)), Fraction(0)),
            sum((self._im[i][i] for i in range(self.n)), Fraction(0)),
        )

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._re) and not any(any(r) for r in self._im)

    def __eq__(self, other):
        if not isinstance(other, GaussMatrix):
            return NotImplemented
        return self.n == other.n and self._re == other._re and self._im == other._im

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows())
        return f"GaussMatrix([{body}])"


def trace_of_product(a: GaussMatrix, b: GaussMatrix) -> GaussRational:
    """``trace(a @ b)`` without forming the product."""
    a._check(b)
    re = Fraction(0)
    im = Fraction(0)
    n = a.n
    for i in range(n):
        are, aim = a._re[i], a._im[i]
        for j in range(n):
            p, q = are[j], aim[j]
            if not p and not q:
                continue
            c, d = b._re[j][i], b._im[j][i]
            if c or d:
                re += p * c - q * d
                im += p * d + q * c
    return GaussRational(re, im)


def _block(m: int, blocks: Dict[Tuple[int, int], Dict[Tuple[int, int], GaussRational]]) -> GaussMatrix:
    # blocks[(bi, bj)] maps (i, j) in the m x m block to an entry (0-based)
    out = GaussMatrix(2 * m)
    for (bi, bj), entries in blocks.items():
        for (i, j), v in entries.items():
            out._re[bi * m + i][bj * m + j] += v.re
            out._im[bi * m + i][bj * m + j] += v.im
    return out


def _sym_entries(k: int, l: int, scale: GaussRational) -> Dict[Tuple[int, int], GaussRational]:
    # scale * X^(kl), X^(kl) = (e_kl + e_lk) / 2, 0-based indices
    half = scale * Fraction(1, 2)
    out: Dict[Tuple[int, int], GaussRational] = {}
    for ij in ((k, l), (l, k)):
        out[ij] = out.get(ij, ZERO) + half
    return out


def realize(g: GeneratorId, m: int) -> GaussMatrix:
    """The 2m x 2m matrix of a generator."""
    check_rank(m)
    g.check_range(m)
    return _realize(g, m)


@lru_cache(maxsize=None)
def _realize(g: GeneratorId, m: int) -> GaussMatrix:
    k, l = g.k - 1, g.l - 1
    if g.kind in (EPLUS, EMINUS):
        s = 1 if g.kind == EPLUS else -1
        # [[X, +-iX], [+-iX, -X]]
        return _block(
            m,
            {
                (0, 0): _sym_entries(k, l, ONE),
                (0, 1): _sym_entries(k, l, I_UNIT * s),
                (1, 0): _sym_entries(k, l, I_UNIT * s),
                (1, 1): _sym_entries(k, l, -ONE),
            },
        )
    # B_kl = (a_kl + i s_kl) / 2 with a_kl: A = e_kl - e_lk, S = 0 and
    # s_kl: A = 0, S = e_kl + e_lk, in the layout [[A, -S], [S, A]]
    half = GaussRational(Fraction(1, 2))
    ihalf = GaussRational(0, Fraction(1, 2))
    a: Dict[Tuple[int, int], GaussRational] = {}
    if k != l:
        a[(k, l)] = half
        a[(l, k)] = -half
    s = _sym_entries(k, l, ihalf * 2)
    return _block(
        m,
        {
            (0, 0): a,
            (1, 1): a,
            (0, 1): {ij: -v for ij, v in s.items()},
            (1, 0): s,
        },
    )


def symplectic_form(m: int) -> GaussMatrix:
    """The matrix [[0, -1], [1, 0]] defining sp_m."""
    out = GaussMatrix(2 * m)
    for i in range(m):
        out._re[i][m + i] = Fraction(-1)
        out._re[m + i][i] = Fraction(1)
    return out


def is_symplectic(g: GaussMatrix) -> bool:
    if g.n % 2:
        return False
    J = symplectic_form(g.n // 2)
    return (g.transpose() @ J + J @ g).is_zero()


def bilinear_form(a: GaussMatrix, b: GaussMatrix) -> GaussRational:
    """Invariant form ``trace(a b) / 2``."""
    return trace_of_product(a, b) * Fraction(1, 2)


def dual(g: GeneratorId) -> Tuple[Fraction, GeneratorId]:
    """Dual basis vector with respect to :func:`bilinear_form`."""
    if g.kind == BGEN:
        return Fraction(1), B(g.l, g.k)
    other = EMINUS if g.kind == EPLUS else EPLUS
    scale = Fraction(1, 2) if g.k == g.l else Fraction(1)
    return scale, GeneratorId(other, g.k, g.l)


def _d(a: int, b: int) -> int:
    return 1 if a == b else 0


@lru_cache(maxsize=None)
def bracket_terms(g1: GeneratorId, g2: GeneratorId) -> Tuple[Tuple[GeneratorId, int], ...]:
    """``[g1, g2]`` as a sorted tuple of ``(generator, integer coefficient)``."""
    acc: Dict[GeneratorId, int] = {}

    def put(c: int, g: GeneratorId) -> None:
        if c:
            acc[g] = acc.get(g, 0) + c

    t1, t2 = g1.kind, g2.kind
    if t1 == t2 and t1 != BGEN:
        pass
    elif t1 == EPLUS and t2 == EMINUS:
        i, j, k, l = g1.k, g1.l, g2.k, g2.l
        put(_d(i, k), B(j, l))
        put(_d(j, l), B(i, k))
        put(_d(i, l), B(j, k))
        put(_d(j, k), B(i, l))
    elif t1 == BGEN and t2 == EPLUS:
        i, j, k, l = g1.k, g1.l, g2.k, g2.l
        put(_d(j, k), Ep(i, l))
        put(_d(j, l), Ep(i, k))
    elif t1 == BGEN and t2 == EMINUS:
        i, j, k, l = g1.k, g1.l, g2.k, g2.l
        put(-_d(i, k), Em(j, l))
        put(-_d(i, l), Em(j, k))
    elif t1 == BGEN and t2 == BGEN:
        i, j, k, l = g1.k, g1.l, g2.k, g2.l
        put(_d(j, k), B(i, l))
        put(-_d(i, l), B(k, j))
    else:
        return tuple((g, -c) for g, c in bracket_terms(g2, g1))
    return tuple(sorted(((g, c) for g, c in acc.items() if c), key=lambda t: t[0].key))


def realize_combination(terms: Iterable[Tuple[GeneratorId, object]], m: int) -> GaussMatrix:
    out = GaussMatrix(2 * m)
    for g, c in terms:
        out = out + realize(g, m).scale(c)
    return out


def special_matrices(m: int) -> Tuple[GaussMatrix, GaussMatrix, GaussMatrix, GaussMatrix]:
    """``(K1, K2, P+, P-)``, the 2m x 2m block matrices built from identities."""
    check_rank(m)
    one = {(i, i): ONE for i in range(m)}

    def blk(a, b, c, d):
        return _block(
            m,
            {
                (0, 0): {ij: v * a for ij, v in one.items()},
                (0, 1): {ij: v * b for ij, v in one.items()},
                (1, 0): {ij: v * c for ij, v in one.items()},
                (1, 1): {ij: v * d for ij, v in one.items()},
            },
        )

    i = I_UNIT
    K1 = blk(ONE, i, -i, ONE)
    K2 = blk(ONE, -i, i, ONE)
    Pp = blk(ONE, i, i, -ONE)
    Pm = blk(ONE, -i, -i, -ONE)
    return K1, K2, Pp, Pm


def jacobi_defect(g1: GeneratorId, g2: GeneratorId, g3: GeneratorId) -> Dict[GeneratorId, int]:
    """Cyclic Jacobi sum expanded through the bracket table; empty when it holds."""
    acc: Dict[GeneratorId, int] = {}
    for a, b, c in ((g1, g2, g3), (g2, g3, g1), (g3, g1, g2)):
        for h, ch in bracket_terms(b, c):
            for x, cx in bracket_terms(a, h):
                acc[x] = acc.get(x, 0) + ch * cx
    return {g: c for g, c in acc.items() if c}


@dataclass
class SelftestReport:
    rank: int
    passed: bool = True
    checks: Dict[str, bool] = field(default_factory=dict)
    counterexample: str = ""

    def fail(self, name: str, what: str) -> None:
        self.checks[name] = False
        if self.passed:
            self.counterexample = f"{name}: {what}"
        self.passed = False


def structure_selftest(m: int, jacobi: bool = True) -> SelftestReport:
    """Check brackets, duality and the K/P table against matrices.

    Failures are collected in the report rather than raised.
    """
    check_rank(m)
    report = SelftestReport(m)
    basis = list_basis(m)
    mats = {g: realize(g, m) for g in basis}

    report.checks["symplectic"] = True
    for g in basis:
        if not is_symplectic(mats[g]):
            report.fail("symplectic", str(g))
            break

    report.checks["bracket"] = True
    for g1, g2 in product(basis, repeat=2):
        comm = mats[g1] @ mats[g2] - mats[g2] @ mats[g1]
        if realize_combination(bracket_terms(g1, g2), m) != comm:
            report.fail("bracket", f"[{g1}, {g2}]")
            break

    report.checks["duality"] = True
    for gi, gj in product(basis, repeat=2):
        c, h = dual(gj)
        value = bilinear_form(mats[gi], mats[h]) * c
        if value != (1 if gi == gj else 0):
            report.fail("duality", f"B({gi}, {gj}*) = {value}")
            break

    if jacobi:
        report.checks["jacobi"] = True
        done = False
        for i, g1 in enumerate(basis):
            for j in range(i, len(basis)):
                for g3 in basis[j:]:
                    if jacobi_defect(g1, basis[j], g3):
                        report.fail("jacobi", f"({g1}, {basis[j]}, {g3})")
                        done = True
                        break
                if done:
                    break
            if done:
                break

    report.checks["special_matrices"] = True
    failed = [name for name, ok in kp_table(m).items() if not ok]
    if failed:
        report.fail("special_matrices", failed[0])
    return report


def kp_table(m: int) -> Dict[str, bool]:
    """Multiplication table of K1, K2, P+, P-.

    The displayed block matrices are twice idempotent (K1 @ K1 == 2 K1), so
    the table is evaluated on ``K/2`` and ``P/2``; the relations that are
    homogeneous of degree zero (products equal to 0) hold either way.
    """
    K1, K2, Pp, Pm = (x.scale(Fraction(1, 2)) for x in special_matrices(m))
    zero = GaussMatrix(2 * m)
    table = {
        "K1K1=K1": (K1 @ K1, K1),
        "K2K2=K2": (K2 @ K2, K2),
        "P+P+=0": (Pp @ Pp, zero),
        "P-P-=0": (Pm @ Pm, zero),
        "P+P-=K2": (Pp @ Pm, K2),
        "P-P+=K1": (Pm @ Pp, K1),
        "K1K2=0": (K1 @ K2, zero),
        "K2K1=0": (K2 @ K1, zero),
        "P+K2=0": (Pp @ K2, zero),
        "K1P+=0": (K1 @ Pp, zero),
        "P+K1=P+": (Pp @ K1, Pp),
        "K2P+=P+": (K2 @ Pp, Pp),
        "P-K1=0": (Pm @ K1, zero),
        "K2P-=0": (K2 @ Pm, zero),
        "P-K2=P-": (Pm @ K2, Pm),
        "K1P-=P-": (K1 @ Pm, Pm),
    }
    return {name: lhs == rhs for name, (lhs, rhs) in table.items()}
