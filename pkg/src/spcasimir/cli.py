"""Command line: ``spcasimir words | casimir | verify``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager
from typing import Callable, List, Optional, Tuple

from . import casimir as cas
from . import ktype
from .envelope import pbw_normalize
from .io import json_encode, to_latex, to_text
from .lie import structure_selftest
from .words import (
    enumerate_words,
    enumerate_words_claim,
    format_word,
    is_admissible,
    sign_exponent,
    trace,
    word_sign,
)

REFERENCE_TUPLE_LIMIT = 10**8
# verify skips the brute-force oracle above this many tuples
VERIFY_TUPLE_LIMIT = 10**6


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


@contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def words_listing(r: int, claim: bool = False, fmt: str = "text") -> Tuple[str, int]:
    """Listing text and number of words."""
    ws = enumerate_words_claim(r) if claim else enumerate_words(r)
    if fmt == "json":
        rows = []
        for w in ws:
            row = {"word": list(w)}
            if not claim:
                row["L"] = sign_exponent(w)
                row["sign"] = word_sign(w)
            rows.append(row)
        return json.dumps({"r": r, "claim": claim, "count": len(ws), "words": rows}, indent=2) + "\n", len(ws)
    lines = []
    for w in ws:
        if claim:
            lines.append(format_word(w))
        else:
            s = word_sign(w)
            lines.append(f"{format_word(w)}\tL={sign_exponent(w)}\tsign={'+1' if s > 0 else '-1'}")
    return "".join(line + "\n" for line in lines), len(ws)


def cmd_words(args) -> int:
    text, count = words_listing(args.r, args.claim, args.format)
    with _output(args.out) as fh:
        fh.write(text)
    if count != 4**args.r:
        print(f"expected {4 ** args.r} words, found {count}", file=sys.stderr)
        return 1
    return 0


def cmd_casimir(args) -> int:
    if args.method == "reference":
        count = cas.reference_tuple_count(2 * args.r, args.m)
        if count > REFERENCE_TUPLE_LIMIT and not args.force:
            print(
                f"refusing to sum {count} basis tuples (limit {REFERENCE_TUPLE_LIMIT}); pass --force",
                file=sys.stderr,
            )
            return 2
        p = cas.build_reference(2 * args.r, args.m, threads=args.threads)
    else:
        p = cas.build_theorem(args.r, args.m)
    if args.normalize:
        p = pbw_normalize(p)
    if args.format == "json":
        text = json_encode(p, indent=2)
    elif args.format == "latex":
        text = to_latex(p)
    else:
        text = to_text(p)
    with _output(args.out) as fh:
        fh.write(text + "\n")
    return 0


class Suite:
    def __init__(self, out):
        self.out = out
        self.failed = 0
        self.passed = 0
        self.skipped = 0

    def check(self, name: str, fn: Callable[[], object]) -> None:
        t = time.perf_counter()
        try:
            ok = bool(fn())
            err = ""
        except Exception as exc:  # reported, not raised
            ok = False
            err = f"  [{type(exc).__name__}: {exc}]"
        dt = time.perf_counter() - t
        self.out.write(f"{'PASS' if ok else 'FAIL'}  {name}  ({dt:.2f}s){err}\n")
        self.out.flush()
        if ok:
            self.passed += 1
        else:
            self.failed += 1

    def skip(self, name: str, why: str) -> None:
        self.out.write(f"SKIP  {name}  ({why})\n")
        self.skipped += 1


def run_structure(s: Suite, m: int) -> None:
    report = {}

    def run():
        report["r"] = structure_selftest(m)
        return True

    s.check(f"structure m={m}: self-test ran", run)
    rep = report.get("r")
    if rep is None:
        return
    for name, ok in rep.checks.items():
        s.check(f"structure m={m}: {name}", lambda ok=ok: ok)


def run_casimir(s: Suite, m: int, max_r: int, threads: int) -> None:
    for r in range(1, max_r + 1):
        s.check(
            f"casimir r={r}: admissible words 4^r",
            lambda r=r: len(enumerate_words(r)) == 4**r and all(map(is_admissible, enumerate_words(r))),
        )
        if r <= 3:
            s.check(
                f"casimir r={r}: word signs match the matrix oracle",
                lambda r=r: all(cas.oracle_word_sign(w) == word_sign(w) for w in enumerate_words(r)),
            )
        s.check(
            f"casimir m={m} r={r}: D_{2 * r} central",
            lambda r=r: cas.centrality_check(cas.build_theorem(r, m), m, threads),
        )
        count = cas.reference_tuple_count(2 * r, m)
        if count <= VERIFY_TUPLE_LIMIT:
            s.check(
                f"casimir m={m} r={r}: word sum equals reference",
                lambda r=r: cas.oracle_equivalent(r, m, threads),
            )
        else:
            s.skip(f"casimir m={m} r={r}: word sum equals reference", f"{count} tuples")
    parts = "abc" if max_r >= 2 else "a"
    for part in parts:
        s.check(f"casimir m={m}: rearranged identity ({part})", lambda part=part: cas.rearranged_check(m, part))
    if m >= 2 and max_r >= 2:
        s.check(f"casimir m={m}: symbol(D_4) not proportional to symbol(D_2)^2", lambda: cas.independence_spotcheck(m))


def run_ktype(s: Suite, m: int, max_r: int) -> None:
    s.check(
        f"ktype m={m}: hw(trace BB) closed form",
        lambda: ktype.hw_action_k(trace("BB", m)) == ktype.trace_bb_closed_form(ktype.symbolic_weight(m)),
    )
    for n in range(1, 5):
        for letter in ("B", "B*"):
            w = letter * n
            s.check(
                f"ktype m={m}: hw = lw on trace({w})",
                lambda w=w: ktype.hw_action_k(trace(w, m)) == ktype.lw_action_k(trace(w, m)),
            )
    report = {}

    def run():
        report["r"] = ktype.verify_scalar_identities(m, max_r)
        return True

    s.check(f"ktype m={m}: scalar identities ran", run)
    rep = report.get("r")
    if rep is not None:
        for name, ok in rep.results.items():
            s.check(f"ktype m={m}: scalar identity ({name})", lambda ok=ok: ok)


def cmd_verify(args) -> int:
    with _output(args.out) as fh:
        s = Suite(fh)
        suites = ["structure", "casimir", "ktype"] if args.suite == "all" else [args.suite]
        t = time.perf_counter()
        for name in suites:
            if name == "structure":
                run_structure(s, args.m)
            elif name == "casimir":
                run_casimir(s, args.m, args.max_r, args.threads)
            else:
                run_ktype(s, args.m, args.max_r)
        fh.write(
            f"{s.passed} passed, {s.failed} failed, {s.skipped} skipped in {time.perf_counter() - t:.2f}s\n"
        )
    return 0 if s.failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spcasimir", description="Casimir elements of sp_m in exact arithmetic")
    parser.add_argument(
        "--threads",
        type=positive_int,
        default=None,
        help="worker processes (default: $CASIMIR_THREADS or all cores)",
    )
    parser.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("words", help="list admissible words")
    p.add_argument("--r", type=positive_int, required=True, help="half the word length")
    p.add_argument("--claim", action="store_true", help="use the unbalanced-by-one variant")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("casimir", help="print a Casimir element")
    p.add_argument("--m", type=positive_int, required=True, help="rank")
    p.add_argument("--r", type=positive_int, required=True, help="degree 2r")
    p.add_argument("--method", choices=("theorem", "reference"), default="theorem")
    p.add_argument("--normalize", action="store_true", help="PBW-normalize before printing")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.add_argument("--force", action="store_true", help="lift the reference tuple limit")
    p.set_defaults(func=cmd_casimir)

    p = sub.add_parser("verify", help="run consistency suites")
    p.add_argument("--m", type=positive_int, required=True, help="rank")
    p.add_argument("--max-r", type=positive_int, default=2)
    p.add_argument("--suite", choices=("structure", "casimir", "ktype", "all"), default="all")
    p.set_defaults(func=cmd_verify)

    for sp in sub.choices.values():
        sp.add_argument("--threads", type=positive_int, default=argparse.SUPPRESS)
        sp.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads is None:
        args.threads = cas.default_threads()
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
