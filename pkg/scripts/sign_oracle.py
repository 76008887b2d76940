"""Per-word signs from the matrix oracle versus the two combinatorial readings.

For every admissible word up to the given half-length this prints how many
words the aligned-pair rule and the maximum-matching rule get right, and
lists the words where the matching rule fails.

    python scripts/sign_oracle.py --max-r 4
"""

import argparse
import time
from dataclasses import dataclass

from spcasimir.casimir import oracle_word_sign
from spcasimir.words import enumerate_words, format_word, max_disjoint_occurrences, sign_is_ambiguous, word_sign


@dataclass
class SignConfig:
    max_r: int = 3
    ambiguity_r: int = 6  # check the two pair cuts agree up to this half-length
    show: int = 12


def run(cfg: SignConfig) -> bool:
    ok = True
    for r in range(1, cfg.max_r + 1):
        t = time.perf_counter()
        words = enumerate_words(r)
        oracle = {w: oracle_word_sign(w) for w in words}
        aligned = sum(word_sign(w) == s for w, s in oracle.items())
        matching_bad = [w for w, s in oracle.items() if (-1) ** max_disjoint_occurrences(w) != s]
        ok &= aligned == len(words)
        print(
            f"r={r}: {len(words)} words, aligned-pair rule {aligned}/{len(words)}, "
            f"max-matching rule {len(words) - len(matching_bad)}/{len(words)}  "
            f"({time.perf_counter() - t:.2f}s)"
        )
        for w in matching_bad[: cfg.show]:
            print(f"    matching rule wrong: {format_word(w)}  (oracle sign {oracle[w]:+d})")
    for r in range(1, cfg.ambiguity_r + 1):
        amb = sum(sign_is_ambiguous(w) for w in enumerate_words(r))
        ok &= amb == 0
        print(f"r={r}: {amb} words where the two pair cuts disagree in parity")
    return ok


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-r", type=int, default=SignConfig.max_r)
    p.add_argument("--ambiguity-r", type=int, default=SignConfig.ambiguity_r)
    a = p.parse_args()
    raise SystemExit(0 if run(SignConfig(a.max_r, a.ambiguity_r)) else 1)


if __name__ == "__main__":
    main()
