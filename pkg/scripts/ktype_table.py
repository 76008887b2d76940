"""Highest-weight values and scalar K-type certificates for small ranks.

    python scripts/ktype_table.py --max-m 3 --max-r 2
"""

import argparse
from dataclasses import dataclass

from spcasimir.ktype import membership_certificate, hw_action_k, verify_scalar_identities
from spcasimir.words import trace


@dataclass
class TableConfig:
    max_m: int = 3
    max_r: int = 2


def run(cfg: TableConfig) -> bool:
    ok = True
    for m in range(1, cfg.max_m + 1):
        print(f"m={m}")
        for w in ("BB", "BBB", "BBBB"):
            print(f"  hw(trace {w}) = {hw_action_k(trace(w, m))}")
        report = verify_scalar_identities(m, cfg.max_r)
        ok &= report.passed
        print(f"  scalar identities: {report.results}")
        for r in range(2, cfg.max_r + 1):
            print(f"  reduce(D_{2 * r}) - 2 reduce(T_{r}) = {membership_certificate(r, m)}")
    return ok


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-m", type=int, default=TableConfig.max_m)
    p.add_argument("--max-r", type=int, default=TableConfig.max_r)
    a = p.parse_args()
    raise SystemExit(0 if run(TableConfig(a.max_m, a.max_r)) else 1)


if __name__ == "__main__":
    main()
