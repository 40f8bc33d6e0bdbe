"""Identity suites and the group-action verification harness.

The construction has a group-side mirror: take the free product of order-two
generators, one per basis word, acting on the carrier by right loop
multiplication.  A *group word* is a reduced sequence of such generators
(adjacent entries distinct); it acts by folding.  Words that move the
identity word to ``v != 1`` can be pushed back into the stabilizer by the
palindromic word of ``v`` — :func:`check_transversal` verifies exactly that
decomposition on a bounded universe.

:func:`check_identity_suite` checks the loop identities themselves:

======  ==============================================================
bol     right Bol law          ``((x y) z) y  =  x ((y z) y)``
exp2    exponent two           ``x x = 1``
rip     right inverse property ``(x y) y = x``
nuclei  no non-identity element associates in the middle with all pairs
unique-form  distinct bounded palindromic forms denote distinct elements,
        and each is the canonical form of its value
======  ==============================================================

Universes are exhaustive when small enough, otherwise a seeded sample; every
report records what was scanned, so the checks are reproducible.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .basis import (
    SHARED_CACHE,
    BasisCache,
    enumerate_basis,
    enumerate_loop_words,
    in_basis,
)
from .loop import mul, symmetric_form
from .normalize import normal_form_chain
from .words import IDENTITY, Alphabet, Word, render

__all__ = [
    "BudgetExceeded",
    "GroupWord",
    "group_mul",
    "act",
    "s_word",
    "SampleSpec",
    "CheckReport",
    "IDENTITY_SUITES",
    "check_identity_suite",
    "check_transversal",
]


class BudgetExceeded(RuntimeError):
    """A check ran past its wall-clock budget."""


@dataclass(frozen=True)
class GroupWord:
    """Reduced word in the free product of involutions: a tuple of basis
    words with adjacent entries distinct.  The empty tuple is the group
    identity."""

    gens: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        for a, b in zip(self.gens, self.gens[1:]):
            if a is b:
                raise ValueError(f"adjacent equal generators: {a!r}")
        for g in self.gens:
            if not in_basis(g):
                raise ValueError(f"generator is not a basis member: {g!r}")

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return group_mul(self, other)

    def inverse(self) -> "GroupWord":
        """Generators are involutions, so inversion just reverses the word."""
        return GroupWord(self.gens[::-1])

    def __len__(self) -> int:
        return len(self.gens)


def group_mul(u: GroupWord, v: GroupWord) -> GroupWord:
    """Concatenate and cancel equal generators meeting at the seam."""
    a = list(u.gens)
    j = 0
    while a and j < len(v.gens) and a[-1] is v.gens[j]:
        a.pop()
        j += 1
    return GroupWord(tuple(a) + v.gens[j:])


def act(start: Word, gw: GroupWord, cache: BasisCache = SHARED_CACHE) -> Word:
    """Fold right loop multiplications by the generators into ``start``."""
    out = start
    for g in gw.gens:
        out = mul(out, g, cache)
    return out


def s_word(gw: GroupWord, cache: BasisCache = SHARED_CACHE) -> GroupWord:
    """The palindromic group word acting like the image ``act(1, gw)``.

    Multiplying ``gw`` by it lands in the stabilizer of the identity word.
    Raises ``ValueError`` when ``gw`` stabilizes the identity already.
    """
    v = act(IDENTITY, gw, cache)
    if v.size == 0:
        raise ValueError("group word already stabilizes the identity")
    return GroupWord(symmetric_form(v, cache).sequence)


@dataclass(frozen=True)
class SampleSpec:
    """Universe bounds for a check.

    ``max_len`` bounds the word length of loop elements (and of basis
    generators); ``max_seq`` bounds generator-sequence length where one
    applies (group words, palindrome halves).  A tuple universe larger than
    ``exhaustive_limit`` is replaced by ``sample_size`` draws seeded with
    ``seed``.
    """

    max_len: int = 3
    max_seq: int = 3
    exhaustive_limit: int = 200_000
    sample_size: int = 2000
    seed: int = 0


@dataclass
class CheckReport:
    """Outcome of one check: what ran, over what, and what failed."""

    name: str
    universe: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0
    seed: int | None = None  # set when the universe was sampled

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "property": self.name,
            "universe": self.universe,
            "cases": self.cases,
            "failures": list(self.failures),
            "elapsed_ms": round(self.elapsed_ms, 3),
            "seed": self.seed,
            "passed": self.ok,
        }


def _deadline(budget_ms: float | None) -> float | None:
    return None if budget_ms is None else time.monotonic() + budget_ms / 1000.0


def _tick(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() >= deadline:
        raise BudgetExceeded("wall-clock budget exhausted")


def _distinct_runs(pool, length):
    """All tuples over ``pool`` of the given length with adjacent entries
    distinct."""
    if length == 0:
        yield ()
        return
    for prefix in _distinct_runs(pool, length - 1):
        for g in pool:
            if prefix and prefix[-1] is g:
                continue
            yield prefix + (g,)


def _bol(x, y, z, cache):
    return mul(mul(mul(x, y, cache), z, cache), y, cache) is mul(
        x, mul(mul(y, z, cache), y, cache), cache
    )


def _exp2(x, cache):
    return mul(x, x, cache) is IDENTITY


def _rip(x, y, cache):
    return mul(mul(x, y, cache), y, cache) is x


IDENTITY_SUITES = ("bol", "exp2", "rip", "nuclei", "unique-form")

_TUPLE_SUITES = {
    "bol": (3, _bol, "((x y) z) y = x ((y z) y)"),
    "exp2": (1, _exp2, "x x = 1"),
    "rip": (2, _rip, "(x y) y = x"),
}


def check_identity_suite(
    which: str,
    alphabet: Alphabet,
    spec: SampleSpec = SampleSpec(),
    cache: BasisCache = SHARED_CACHE,
    budget_ms: float | None = None,
) -> CheckReport:
    """Run one identity suite (see the module docstring) and report."""
    deadline = _deadline(budget_ms)
    start = time.perf_counter()
    if which in _TUPLE_SUITES:
        report = _check_tuple_identity(which, alphabet, spec, cache, deadline)
    elif which == "nuclei":
        report = _check_middle_nucleus(alphabet, spec, cache, deadline)
    elif which == "unique-form":
        report = _check_unique_form(alphabet, spec, cache, deadline)
    else:
        raise ValueError(f"unknown suite {which!r} (choose from {IDENTITY_SUITES})")
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def _check_tuple_identity(which, alphabet, spec, cache, deadline) -> CheckReport:
    arity, holds, law = _TUPLE_SUITES[which]
    pool = enumerate_loop_words(alphabet, spec.max_len, cache)
    total = len(pool) ** arity
    names = "xyz"[:arity]
    base = (
        f"{law} over the {len(pool)} carrier elements of length <= "
        f"{spec.max_len} on {alphabet.symbols!r}"
    )
    if total <= spec.exhaustive_limit:
        tuples = itertools.product(pool, repeat=arity)
        report = CheckReport(which, f"{base}, exhaustive ({total} tuples)")
    else:
        rng = random.Random(spec.seed)
        tuples = (
            tuple(rng.choice(pool) for _ in range(arity))
            for _ in range(spec.sample_size)
        )
        report = CheckReport(
            which,
            f"{base}, sample of {spec.sample_size} tuples (seed {spec.seed})",
            seed=spec.seed,
        )
    for tup in tuples:
        _tick(deadline)
        report.cases += 1
        if not holds(*tup, cache):
            binding = " ".join(
                f"{n}={render(w, alphabet)}" for n, w in zip(names, tup)
            )
            report.failures.append(f"{law} fails at {binding}")
    return report


def _check_middle_nucleus(alphabet, spec, cache, deadline) -> CheckReport:
    """No non-identity element may satisfy ``(x a) y = x (a y)`` for *all*
    ``x, y`` in the bounded universe.  Always exhaustive."""
    pool = enumerate_loop_words(alphabet, spec.max_len, cache)
    total = len(pool) ** 3
    if total > spec.exhaustive_limit:
        raise ValueError(
            f"middle-nucleus scan needs an exhaustive universe "
            f"({total} > limit {spec.exhaustive_limit}); lower max_len"
        )
    report = CheckReport(
        "nuclei",
        f"middle-nucleus scan over the {len(pool)} carrier elements of "
        f"length <= {spec.max_len} on {alphabet.symbols!r}, exhaustive",
    )
    for a in pool:
        if a.size == 0:
            continue
        central = True
        for x, y in itertools.product(pool, repeat=2):
            _tick(deadline)
            report.cases += 1
            if mul(mul(x, a, cache), y, cache) is not mul(x, mul(a, y, cache), cache):
                central = False
                break
        if central:
            report.failures.append(
                f"non-identity element {render(a, alphabet)} passes the "
                f"middle-nucleus test at this bound"
            )
    return report


def _check_unique_form(alphabet, spec, cache, deadline) -> CheckReport:
    """Distinct palindromic halves (entries: basis words of length <=
    ``max_len``; half length <= ``max_seq``) must denote distinct non-identity
    elements, each having that half as its canonical form."""
    gens = enumerate_basis(alphabet, spec.max_len, cache)
    report = CheckReport(
        "unique-form",
        f"palindromic halves of length <= {spec.max_seq} over the "
        f"{len(gens)} basis words of length <= {spec.max_len} on "
        f"{alphabet.symbols!r}, exhaustive",
    )

    def fmt(half):
        return "(" + ", ".join(render(h, alphabet) for h in half) + ")"

    index: dict[Word, tuple[Word, ...]] = {}
    for m in range(1, spec.max_seq + 1):
        for half in _distinct_runs(gens, m):
            _tick(deadline)
            report.cases += 1
            value = normal_form_chain(IDENTITY, half + half[-2::-1])
            if value.size == 0:
                report.failures.append(f"{fmt(half)} denotes the identity")
            elif value in index:
                report.failures.append(
                    f"collision: {fmt(index[value])} and {fmt(half)} both "
                    f"denote {render(value, alphabet)}"
                )
            else:
                index[value] = half
                if symmetric_form(value, cache).half != half:
                    report.failures.append(
                        f"{fmt(half)} denotes {render(value, alphabet)} but is "
                        f"not its canonical form"
                    )
    return report


def check_transversal(
    alphabet: Alphabet,
    spec: SampleSpec = SampleSpec(max_len=5),
    cache: BasisCache = SHARED_CACHE,
    budget_ms: float | None = None,
) -> CheckReport:
    """Every group word ``g`` moving the identity to ``v != 1`` must return to
    the stabilizer after the palindromic word of ``v``:
    ``act(1, g * s_word(g)) = 1``."""
    deadline = _deadline(budget_ms)
    start = time.perf_counter()
    gens = enumerate_basis(alphabet, spec.max_len, cache)
    n = len(gens)
    total = sum(n * (n - 1) ** (k - 1) for k in range(1, spec.max_seq + 1))
    base = (
        f"group words of <= {spec.max_seq} generators over the {n} basis "
        f"words of length <= {spec.max_len} on {alphabet.symbols!r}"
    )
    if total <= spec.exhaustive_limit:
        runs = (
            run
            for k in range(1, spec.max_seq + 1)
            for run in _distinct_runs(gens, k)
        )
        report = CheckReport("transversal", f"{base}, exhaustive ({total} words)")
    else:
        rng = random.Random(spec.seed)

        def _sampled():
            for _ in range(spec.sample_size):
                k = rng.randint(1, spec.max_seq)
                run: tuple[Word, ...] = ()
                for _ in range(k):
                    g = rng.choice(gens)
                    while run and run[-1] is g:
                        g = rng.choice(gens)
                    run += (g,)
                yield run

        runs = _sampled()
        report = CheckReport(
            "transversal",
            f"{base}, sample of {spec.sample_size} words (seed {spec.seed})",
            seed=spec.seed,
        )

    for run in runs:
        _tick(deadline)
        report.cases += 1
        gw = GroupWord(run)
        v = act(IDENTITY, gw, cache)
        if v.size == 0:
            continue  # already in the stabilizer; nothing to decompose
        sw = s_word(gw, cache)
        label = "*".join(render(g, alphabet) for g in run)
        if act(IDENTITY, sw, cache) is not v:
            report.failures.append(
                f"palindromic word of {label} denotes the wrong element"
            )
        elif act(IDENTITY, group_mul(gw, sw), cache).size != 0:
            report.failures.append(
                f"{label} * its palindromic word does not stabilize the identity"
            )
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report
