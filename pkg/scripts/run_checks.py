#!/usr/bin/env python3
"""Run the whole identity-check battery and print one report per suite.

Exhaustive where the universe fits under --exhaustive-limit, seeded sampling
otherwise.  Exits 1 if any suite reports a failure.

Example:

    $ python scripts/run_checks.py --alphabet ab --max-len 3 --transversal-len 5
"""

import argparse
import sys

from bol2 import (
    Alphabet,
    SampleSpec,
    check_identity_suite,
    check_transversal,
)
from bol2.verify import IDENTITY_SUITES


def print_report(report) -> None:
    status = "pass" if report.ok else "FAIL"
    seed = f" seed={report.seed}" if report.seed is not None else ""
    print(f"[{status}] {report.name}: {report.cases} cases, "
          f"{len(report.failures)} failures, {report.elapsed_ms:.0f} ms{seed}")
    for line in report.failures[:10]:
        print(f"    {line}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--alphabet", default="ab", metavar="LETTERS")
    parser.add_argument("--max-len", type=int, default=3,
                        help="word-length bound for the identity suites")
    parser.add_argument("--max-seq", type=int, default=3)
    parser.add_argument("--transversal-len", type=int, default=5,
                        help="basis-length bound for the transversal check")
    parser.add_argument("--sample", type=int, default=2000)
    parser.add_argument("--exhaustive-limit", type=int, default=200_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    alphabet = Alphabet(args.alphabet)
    spec = SampleSpec(
        max_len=args.max_len,
        max_seq=args.max_seq,
        exhaustive_limit=args.exhaustive_limit,
        sample_size=args.sample,
        seed=args.seed,
    )

    ok = True
    for which in IDENTITY_SUITES:
        report = check_identity_suite(which, alphabet, spec)
        print_report(report)
        ok = ok and report.ok

    transversal_spec = SampleSpec(
        max_len=args.transversal_len,
        max_seq=args.max_seq,
        exhaustive_limit=args.exhaustive_limit,
        sample_size=args.sample,
        seed=args.seed,
    )
    report = check_transversal(alphabet, transversal_spec)
    print_report(report)
    ok = ok and report.ok

    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
