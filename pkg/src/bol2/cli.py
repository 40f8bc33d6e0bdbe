"""Command line front end.

Exit codes: 0 success (checks passed), 1 a check reported failures,
2 malformed input or usage, 3 an operand is not a loop element (with a
diagnosis naming the offending spine factor), 4 wall-clock budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .basis import (
    enumerate_reduced,
    in_basis,
    in_loop,
    is_candidate,
    why_not_in_loop,
)
from .loop import ldiv, mul, rdiv, symmetric_form
from .verify import (
    BudgetExceeded,
    CheckReport,
    IDENTITY_SUITES,
    SampleSpec,
    check_identity_suite,
    check_transversal,
)
from .words import (
    IDENTITY,
    Alphabet,
    Word,
    WordSyntaxError,
    compare,
    parse,
    render,
    spine_factors,
    transpose,
    transpose_family,
    word_key,
)

__all__ = ["main", "build_parser", "NotLoopElement"]


class NotLoopElement(ValueError):
    """An operand parsed fine but is not an element of the loop carrier."""

    def __init__(self, raw: str, reason: str):
        super().__init__(f"{raw!r} is not a loop element: {reason}")


def _alphabet(ns) -> Alphabet:
    return Alphabet(ns.alphabet)


def _require_loop(raw: str, alphabet: Alphabet) -> Word:
    word = parse(raw, alphabet)
    reason = why_not_in_loop(word, alphabet)
    if reason is not None:
        raise NotLoopElement(raw, reason)
    return word


def _emit(ns, lines: list[str], payload) -> None:
    if ns.format == "json":
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _cmd_normalize(ns) -> int:
    alphabet = _alphabet(ns)
    from .normalize import normal_form

    out = render(normal_form(parse(ns.word, alphabet)), alphabet)
    _emit(ns, [out], out)
    return 0


def _cmd_compare(ns) -> int:
    alphabet = _alphabet(ns)
    c = compare(parse(ns.left, alphabet), parse(ns.right, alphabet))
    out = {-1: "less", 0: "equal", 1: "greater"}[c]
    _emit(ns, [out], out)
    return 0


def _cmd_transpose(ns) -> int:
    alphabet = _alphabet(ns)
    word = parse(ns.word, alphabet)
    factors = spine_factors(word)  # rejects the identity word
    t = transpose(word)
    tt = transpose(t)
    family = transpose_family(word)
    spine = [render(f, alphabet) for f in factors]
    payload = {
        "word": render(word, alphabet),
        "norm": len(factors),
        "spine": spine,
        "transpose": render(t, alphabet),
        "double_transpose": render(tt, alphabet),
        "family_size": len(family),
    }
    lines = [
        f"word: {payload['word']}",
        f"norm: {payload['norm']}",
        f"spine: {', '.join(spine)}",
        f"transpose: {payload['transpose']}",
        f"double-transpose: {payload['double_transpose']}",
        f"family-size: {payload['family_size']}",
    ]
    _emit(ns, lines, payload)
    return 0


def _cmd_mul(ns) -> int:
    alphabet = _alphabet(ns)
    x = _require_loop(ns.left, alphabet)
    y = _require_loop(ns.right, alphabet)
    out = render(mul(x, y), alphabet)
    _emit(ns, [out], out)
    return 0


def _cmd_canon(ns) -> int:
    alphabet = _alphabet(ns)
    g = _require_loop(ns.word, alphabet)
    if g.size == 0:
        raise ValueError("the identity word has no canonical form")
    half = [render(h, alphabet) for h in symmetric_form(g).half]
    _emit(ns, [" ".join(half)], half)
    return 0


def _cmd_rdiv(ns) -> int:
    alphabet = _alphabet(ns)
    b = _require_loop(ns.left, alphabet)
    a = _require_loop(ns.right, alphabet)
    out = render(rdiv(b, a), alphabet)
    _emit(ns, [out], out)
    return 0


def _cmd_ldiv(ns) -> int:
    alphabet = _alphabet(ns)
    a = _require_loop(ns.left, alphabet)
    b = _require_loop(ns.right, alphabet)
    x = ldiv(a, b, alphabet, max_len=ns.bound)
    if x is None:
        _emit(ns, ["not-found"], None)
    else:
        out = render(x, alphabet)
        _emit(ns, [out], out)
    return 0


_ENUM_KINDS = {
    "W": lambda w: True,
    "D": is_candidate,
    "R": in_basis,
    "B": in_loop,
}


def _cmd_enum(ns) -> int:
    alphabet = _alphabet(ns)
    keep = _ENUM_KINDS[ns.kind]
    deadline = None if ns.budget is None else time.monotonic() + ns.budget / 1000.0
    words: list[Word] = [IDENTITY] if ns.kind == "B" else []
    for n in range(1, ns.max_len + 1):
        for w in enumerate_reduced(alphabet, n):
            if deadline is not None and time.monotonic() >= deadline:
                raise BudgetExceeded("enumeration ran past its budget")
            if keep(w):
                words.append(w)
    words.sort(key=word_key)
    rendered = [render(w, alphabet) for w in words]
    _emit(ns, rendered + [f"count: {len(rendered)}"], rendered)
    return 0


def _print_report(ns, report: CheckReport) -> None:
    if ns.format == "json":
        print(json.dumps(report.to_dict()))
        return
    lines = [
        f"property: {report.name}",
        f"universe: {report.universe}",
        f"cases: {report.cases}",
        f"failures: {len(report.failures)}",
        f"elapsed-ms: {report.elapsed_ms:.1f}",
    ]
    if report.seed is not None:
        lines.append(f"seed: {report.seed}")
    lines += [f"  {f}" for f in report.failures[:20]]
    if len(report.failures) > 20:
        lines.append(f"  ... and {len(report.failures) - 20} more")
    lines.append(f"verdict: {'pass' if report.ok else 'fail'}")
    for line in lines:
        print(line)


def _cmd_check(ns) -> int:
    alphabet = _alphabet(ns)
    spec = SampleSpec(
        max_len=ns.max_len,
        max_seq=ns.max_seq,
        exhaustive_limit=ns.exhaustive_limit,
        sample_size=ns.sample,
        seed=ns.seed,
    )
    if ns.suite == "transversal":
        report = check_transversal(alphabet, spec, budget_ms=ns.budget)
    else:
        report = check_identity_suite(ns.suite, alphabet, spec, budget_ms=ns.budget)
    _print_report(ns, report)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--alphabet",
        default="ab",
        metavar="LETTERS",
        help="ordered alphabet, first letter smallest (default: ab)",
    )
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument(
        "--seed", type=int, default=0, help="seed for sampled checks (default: 0)"
    )
    common.add_argument(
        "--budget",
        type=float,
        default=None,
        metavar="MS",
        help="wall-clock budget in milliseconds",
    )

    parser = argparse.ArgumentParser(
        prog="bol2",
        description="Words, canonical basis, and loop arithmetic of the free "
        "Bol loop of exponent two over an ordered alphabet.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser(
        "normalize", parents=[common], help="reduce a word to its normal form"
    )
    p.add_argument("word")
    p.set_defaults(handler=_cmd_normalize)

    p = sub.add_parser(
        "compare", parents=[common], help="order two words (less/equal/greater)"
    )
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser(
        "transpose",
        parents=[common],
        help="spine, transposes, and transpose-family size of a word",
    )
    p.add_argument("word")
    p.set_defaults(handler=_cmd_transpose)

    p = sub.add_parser("mul", parents=[common], help="loop product of two elements")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_mul)

    p = sub.add_parser(
        "canon",
        parents=[common],
        help="half of the canonical palindromic form of an element",
    )
    p.add_argument("word")
    p.set_defaults(handler=_cmd_canon)

    p = sub.add_parser(
        "ldiv", parents=[common], help="left quotient: the x with a*x = b"
    )
    p.add_argument("left", metavar="a")
    p.add_argument("right", metavar="b")
    p.add_argument(
        "--bound",
        type=int,
        default=None,
        help="search length bound (default: |a|+|b|+2)",
    )
    p.set_defaults(handler=_cmd_ldiv)

    p = sub.add_parser(
        "rdiv", parents=[common], help="right quotient: the x with x*a = b"
    )
    p.add_argument("left", metavar="b")
    p.add_argument("right", metavar="a")
    p.set_defaults(handler=_cmd_rdiv)

    p = sub.add_parser(
        "enum",
        parents=[common],
        help="enumerate reduced words (W), candidates (D), the basis (R), "
        "or the loop carrier (B) up to a length",
    )
    p.add_argument("kind", choices=sorted(_ENUM_KINDS))
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(handler=_cmd_enum)

    p = sub.add_parser(
        "check", parents=[common], help="run an identity or structure suite"
    )
    p.add_argument("suite", choices=IDENTITY_SUITES + ("transversal",))
    p.add_argument("--max-len", type=int, default=3, help="word length bound")
    p.add_argument(
        "--max-seq",
        type=int,
        default=3,
        help="generator-sequence bound (group words, palindrome halves)",
    )
    p.add_argument("--sample", type=int, default=2000, help="sample size")
    p.add_argument(
        "--exhaustive-limit",
        type=int,
        default=200_000,
        help="largest tuple universe scanned exhaustively",
    )
    p.set_defaults(handler=_cmd_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return ns.handler(ns)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except NotLoopElement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:  # includes WordSyntaxError and bad alphabets
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
