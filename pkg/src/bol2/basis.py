"""The canonical generating set and the loop carrier.

A reduced word is a *candidate* when it is the order-minimum of its transpose
family and that family stays reduced.  For a composite word those conditions
collapse to a cheap closed form (checked against the literal definition in
the test suite):

    the word and its transpose are reduced and distinct,
    its last spine factor is a letter      (so transposing twice fixes it),
    and it precedes its transpose in the total order.

*Basis* members are candidates all of whose spine factors are recursively in
the basis; the *carrier* consists of the identity word plus every reduced
word whose spine factors are basis members.  Letters are candidates (and
basis members) by convention.

Membership does not depend on the alphabet — only letter ranks matter — so
the default memo tables are process-wide (:data:`SHARED_CACHE`); pass a fresh
:class:`BasisCache` for isolation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING

from .normalize import is_reduced, normal_form
from .words import (
    IDENTITY,
    Alphabet,
    Letter,
    Product,
    Word,
    compare,
    is_symmetric,
    render,
    spine_factors,
    transpose,
    word_key,
)

if TYPE_CHECKING:  # pragma: no cover
    from .loop import PalindromicForm

__all__ = [
    "BasisCache",
    "SHARED_CACHE",
    "is_candidate",
    "in_basis",
    "in_loop",
    "why_not_in_loop",
    "enumerate_reduced",
    "enumerate_candidates",
    "enumerate_basis",
    "enumerate_loop_words",
    "basis_by_fixpoint",
]


@dataclass
class BasisCache:
    """Memo tables shared by the membership predicates and canonical forms.

    One process-wide instance (:data:`SHARED_CACHE`) is the default
    everywhere; separate instances only cost recomputation.
    """

    candidate: dict[Word, bool] = field(default_factory=dict)
    basis: dict[Word, bool] = field(default_factory=dict)
    forms: dict[Word, "PalindromicForm"] = field(default_factory=dict)


SHARED_CACHE = BasisCache()


def is_candidate(word: Word, cache: BasisCache = SHARED_CACHE) -> bool:
    """Order-minimal representative of a fully reduced transpose family.

    Length-1 words are candidates by convention; the identity word is not.
    """
    if word.size == 0:
        return False
    if word.size == 1:
        return True
    try:
        return cache.candidate[word]
    except KeyError:
        pass
    ok = False
    if is_reduced(word) and spine_factors(word)[-1].size == 1:
        t = transpose(word)
        ok = t is not word and is_reduced(t) and compare(word, t) < 0
    cache.candidate[word] = ok
    return ok


def in_basis(word: Word, cache: BasisCache = SHARED_CACHE) -> bool:
    """Basis membership: a candidate whose spine factors are all in the basis."""
    if word.size == 0:
        return False
    if word.size == 1:
        return True
    try:
        return cache.basis[word]
    except KeyError:
        pass
    ok = is_candidate(word, cache) and all(
        in_basis(f, cache) for f in spine_factors(word)
    )
    cache.basis[word] = ok
    return ok


def in_loop(word: Word, cache: BasisCache = SHARED_CACHE) -> bool:
    """Carrier membership: the identity word, or a reduced word whose spine
    factors are basis members."""
    if word.size == 0:
        return True
    return is_reduced(word) and all(in_basis(f, cache) for f in spine_factors(word))


def why_not_in_loop(
    word: Word, alphabet: Alphabet, cache: BasisCache = SHARED_CACHE
) -> str | None:
    """``None`` when the word is a carrier element, else a diagnosis."""
    if word.size == 0:
        return None
    if not is_reduced(word):
        return f"not reduced: normal form is {render(normal_form(word), alphabet)}"
    for f in spine_factors(word):
        if not in_basis(f, cache):
            note = " (the factor is symmetric)" if is_symmetric(f) else ""
            return f"spine factor {render(f, alphabet)} is not a basis member{note}"
    return None


@lru_cache(maxsize=None)
def _reduced_words(n_letters: int, size: int) -> tuple[Word, ...]:
    if size == 1:
        return tuple(Letter(i) for i in range(n_letters))
    out: list[Word] = []
    for left_size in range(1, size):
        for left in _reduced_words(n_letters, left_size):
            for right in _reduced_words(n_letters, size - left_size):
                if left is right:
                    continue
                if isinstance(left, Product) and left.right is right:
                    continue
                out.append(Product(left, right))
    return tuple(out)


def enumerate_reduced(alphabet: Alphabet, size: int) -> tuple[Word, ...]:
    """All reduced words of exactly ``size`` letters, built bottom-up with the
    two square collapses pruned at the root of each product."""
    if size < 1:
        raise ValueError("word size must be at least 1")
    return _reduced_words(len(alphabet), size)


def _filtered_up_to(alphabet, max_len, keep) -> list[Word]:
    out = [
        w
        for n in range(1, max_len + 1)
        for w in enumerate_reduced(alphabet, n)
        if keep(w)
    ]
    out.sort(key=word_key)
    return out


def enumerate_candidates(
    alphabet: Alphabet, max_len: int, cache: BasisCache = SHARED_CACHE
) -> list[Word]:
    """Candidates of length at most ``max_len``, sorted by the word order."""
    return _filtered_up_to(alphabet, max_len, lambda w: is_candidate(w, cache))


def enumerate_basis(
    alphabet: Alphabet, max_len: int, cache: BasisCache = SHARED_CACHE
) -> list[Word]:
    """Basis members of length at most ``max_len``, sorted by the word order."""
    return _filtered_up_to(alphabet, max_len, lambda w: in_basis(w, cache))


def enumerate_loop_words(
    alphabet: Alphabet, max_len: int, cache: BasisCache = SHARED_CACHE
) -> list[Word]:
    """Carrier elements of length at most ``max_len`` (identity included),
    sorted by the word order."""
    return [IDENTITY] + _filtered_up_to(alphabet, max_len, lambda w: in_loop(w, cache))


def basis_by_fixpoint(alphabet: Alphabet, max_len: int) -> frozenset[Word]:
    """Basis by explicit length induction: letters seed the set, and a longer
    candidate joins once all its spine factors already have.

    Cross-checks the recursive :func:`in_basis` in the test suite.
    """
    members: set[Word] = set(alphabet.letters)
    for n in range(2, max_len + 1):
        for w in enumerate_reduced(alphabet, n):
            if is_candidate(w) and all(f in members for f in spine_factors(w)):
                members.add(w)
    return frozenset(members)
