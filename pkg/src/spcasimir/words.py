"""Words over the letters E+, E-, B, B* and their formal traces."""

from __future__ import annotations

from itertools import product
from typing import Dict, Iterable, List, Sequence, Tuple

from .envelope import NcPoly
from .lie import B, Em, Ep, GeneratorId, check_rank

EP, EM, BB, BS = "E+", "E-", "B", "B*"
LETTERS = (EP, EM, BB, BS)

Word = Tuple[str, ...]

# who may follow whom
FOLLOWERS: Dict[str, Tuple[str, ...]] = {
    EP: (EM, BS),
    EM: (EP, BB),
    BB: (EP, BB),
    BS: (EM, BS),
}

SIGN_PATTERNS = frozenset({(EM, BB), (BB, EP)})


class AmbiguousSignError(RuntimeError):
    pass


def parse_word(text: str) -> Word:
    """Parse ``"E+E-BB*"`` or ``"E+ E- B B*"`` into a word."""
    s = text.replace(" ", "").replace("−", "-").replace("∗", "*")
    out: List[str] = []
    i = 0
    while i < len(s):
        if s.startswith("E+", i) or s.startswith("E-", i):
            out.append(s[i : i + 2])
            i += 2
        elif s.startswith("B*", i):
            out.append(BS)
            i += 2
        elif s[i] == "B":
            out.append(BB)
            i += 1
        else:
            raise ValueError(f"cannot parse word {text!r} at position {i}")
    return tuple(out)


def format_word(w: Sequence[str]) -> str:
    return " ".join(w)


def _check_word(w: Sequence[str]) -> None:
    if not w:
        raise ValueError("empty word")
    bad = [x for x in w if x not in LETTERS]
    if bad:
        raise ValueError(f"unknown letters {bad}")


def follows_linear(w: Sequence[str]) -> bool:
    return all(w[i + 1] in FOLLOWERS[w[i]] for i in range(len(w) - 1))


def is_admissible(w: Sequence[str]) -> bool:
    """Adjacency rules read cyclically, plus as many E+ as E-."""
    _check_word(w)
    if not follows_linear(w) or w[0] not in FOLLOWERS[w[-1]]:
        return False
    return w.count(EP) == w.count(EM)


def _linear_words(n: int) -> Iterable[Word]:
    # lexicographic in LETTERS order
    def rec(prefix: List[str]):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        nxt = LETTERS if not prefix else FOLLOWERS[prefix[-1]]
        for x in sorted(nxt, key=LETTERS.index):
            prefix.append(x)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"word half-length r must be >= 1, got {r!r}")


def enumerate_words(r: int) -> List[Word]:
    """All admissible words of length ``2r``, lexicographically (E+ < E- < B < B*)."""
    _check_r(r)
    return [
        w
        for w in _linear_words(2 * r)
        if w[0] in FOLLOWERS[w[-1]] and w.count(EP) == w.count(EM)
    ]


def enumerate_words_claim(r: int) -> List[Word]:
    """Words of length ``2r`` with linear adjacency and #E+ = #E- +- 1."""
    _check_r(r)
    return [w for w in _linear_words(2 * r) if abs(w.count(EP) - w.count(EM)) == 1]


def rotate(w: Sequence[str], k: int = 1) -> Word:
    k %= len(w)
    return tuple(w[k:]) + tuple(w[:k])


def sign_occurrences(w: Sequence[str]) -> List[int]:
    """Start positions of E-B and BE+, cyclically."""
    n = len(w)
    return [i for i in range(n) if (w[i], w[(i + 1) % n]) in SIGN_PATTERNS]


def aligned_sign_count(w: Sequence[str], phase: int) -> int:
    """Occurrences of E-B / BE+ among the letter pairs starting at ``phase``, ``phase + 2``, ...

    The pairs are read cyclically, so ``phase`` is 0 or 1 and the two choices
    cover the two ways of cutting a cyclic word into consecutive pairs.
    """
    n = len(w)
    return sum(1 for i in range(phase, n + phase, 2) if (w[i % n], w[(i + 1) % n]) in SIGN_PATTERNS)


def sign_exponent(w: Sequence[str]) -> int:
    """Number of E-B and BE+ occurrences that sit on aligned letter pairs.

    The word (even length) is cut cyclically into consecutive pairs; both
    cuts are tried and the larger count is returned, which makes the value
    rotation invariant.  Both cuts always have the same parity for
    admissible words; :func:`sign_is_ambiguous` reports any word where they
    do not.
    """
    _check_word(w)
    if len(w) % 2:
        raise ValueError("sign exponent is defined for even-length words")
    return max(aligned_sign_count(w, 0), aligned_sign_count(w, 1))


def sign_is_ambiguous(w: Sequence[str]) -> bool:
    """True when the two pair cuts give different parities."""
    return (aligned_sign_count(w, 0) - aligned_sign_count(w, 1)) % 2 == 1


def max_disjoint_occurrences(w: Sequence[str]) -> int:
    """Largest family of pairwise disjoint cyclic E-B / BE+ occurrences.

    Agrees in parity with :func:`sign_exponent` on every admissible word of
    length <= 4, but not from length 6 on (``E+ B* E- B B B`` gives 2 here,
    while its sign is -1).
    """
    _check_word(w)
    n = len(w)
    occ = set(sign_occurrences(w))
    if not occ:
        return 0
    if len(occ) == n:
        return n // 2
    # consecutive occurrences share a letter; each run of k of them allows ceil(k/2)
    start = next(i for i in range(n) if i not in occ)
    total = 0
    run = 0
    for step in range(1, n + 1):
        i = (start + step) % n
        if i in occ:
            run += 1
        else:
            total += (run + 1) // 2
            run = 0
    return total + (run + 1) // 2


def word_sign(w: Sequence[str]) -> int:
    if sign_is_ambiguous(w):
        raise AmbiguousSignError(f"sign of {format_word(w)} depends on the pair cut")
    return -1 if sign_exponent(w) % 2 else 1


def letter_generator(letter: str, k: int, l: int) -> GeneratorId:
    """Generator sitting at entry ``(k, l)`` of the letter's matrix."""
    if letter == EP:
        return Ep(k, l)
    if letter == EM:
        return Em(k, l)
    if letter == BB:
        return B(k, l)
    if letter == BS:
        return B(l, k)
    raise ValueError(f"unknown letter {letter!r}")


def trace_expand(w: Sequence[str], m: int) -> NcPoly:
    """Formal trace: sum over cyclic index tuples of the indexed letters."""
    _check_word(w)
    check_rank(m)
    n = len(w)
    table = [
        {(k, l): letter_generator(x, k, l) for k in range(1, m + 1) for l in range(1, m + 1)}
        for x in w
    ]
    acc: Dict[Tuple[GeneratorId, ...], int] = {}
    for js in product(range(1, m + 1), repeat=n):
        mono = tuple(table[t][js[t], js[(t + 1) % n]] for t in range(n))
        acc[mono] = acc.get(mono, 0) + 1
    return NcPoly(m, acc)


def trace(text: str, m: int) -> NcPoly:
    """Shorthand: ``trace("E+E-BB", m)``."""
    return trace_expand(parse_word(text), m)
