"""Compare the word formula with the brute-force trace formula over a grid of (m, r).

    python scripts/oracle_sweep.py --max-m 3 --max-r 3 --budget 3e5
"""

import argparse
import time
from dataclasses import dataclass

from spcasimir.casimir import build_reference, build_theorem, centrality_check, reference_tuple_count
from spcasimir.envelope import pbw_normalize


@dataclass
class SweepConfig:
    max_m: int = 3
    max_r: int = 3
    budget: float = 3e5  # skip pairs whose reference sum has more tuples
    threads: int = 1


def sweep(cfg: SweepConfig) -> bool:
    ok = True
    print(f"{'m':>2} {'r':>2} {'tuples':>12} {'equal':>6} {'central':>8} {'seconds':>8}")
    for m in range(1, cfg.max_m + 1):
        for r in range(1, cfg.max_r + 1):
            n = reference_tuple_count(2 * r, m)
            if n > cfg.budget:
                print(f"{m:>2} {r:>2} {n:>12} {'skip':>6}")
                continue
            t = time.perf_counter()
            theorem = build_theorem(r, m)
            equal = pbw_normalize(theorem) == pbw_normalize(build_reference(2 * r, m, cfg.threads))
            central = centrality_check(theorem, m, cfg.threads)
            ok &= equal and central
            print(f"{m:>2} {r:>2} {n:>12} {str(equal):>6} {str(central):>8} {time.perf_counter() - t:>8.2f}")
    return ok


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-m", type=int, default=SweepConfig.max_m)
    p.add_argument("--max-r", type=int, default=SweepConfig.max_r)
    p.add_argument("--budget", type=float, default=SweepConfig.budget)
    p.add_argument("--threads", type=int, default=SweepConfig.threads)
    a = p.parse_args()
    raise SystemExit(0 if sweep(SweepConfig(a.max_m, a.max_r, a.budget, a.threads)) else 1)


if __name__ == "__main__":
    main()
