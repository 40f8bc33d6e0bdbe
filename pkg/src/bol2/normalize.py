"""Reduction of words to normal form.

A word is *reduced* when no subtree has the shape ``uu`` or ``(uv)v``.  The
normal-form map fixes letters and the identity, collapses ``uu`` to ``1`` and
``(uv)v`` to ``u``, and otherwise recurses into both factors.  For two words
already in normal form the product needs only a constant amount of extra
work:

    nf(u * v) = 1      if u == v,
              = a      if u == (a v) for some a,
              = (u v)  otherwise (and that word is always reduced).

Both predicates here are memoized on word identity (words are interned), so
normalizing costs linear time in the number of distinct subtrees.  CPython's
GIL makes the shared dict memos safe to use across threads.
"""

from __future__ import annotations

from typing import Iterable

from .words import IDENTITY, Product, Word

__all__ = [
    "InternalInvariantError",
    "is_reduced",
    "reduce_product",
    "normal_form",
    "normal_form_chain",
]


class InternalInvariantError(RuntimeError):
    """A structural fact guaranteed by the theory failed to hold at runtime.

    Seeing this exception means a bug in this package (or an unvalidated
    input smuggled past a precondition), never a property of the input data.
    """


_REDUCED: dict[Word, bool] = {}
_NORMAL: dict[Word, Word] = {}


def is_reduced(word: Word) -> bool:
    """No subtree of shape ``uu`` or ``(uv)v``; letters and the identity word
    count as reduced."""
    if word.size < 2:
        return True
    try:
        return _REDUCED[word]
    except KeyError:
        pass
    u, v = word.left, word.right
    ok = (
        u is not v
        and not (isinstance(u, Product) and u.right is v)
        and is_reduced(u)
        and is_reduced(v)
    )
    _REDUCED[word] = ok
    return ok


def reduce_product(u: Word, v: Word) -> Word:
    """Normal form of ``u * v`` for ``u``, ``v`` already in normal form."""
    if u.size == 0:
        return v
    if v.size == 0:
        return u
    if u is v:
        return IDENTITY
    if isinstance(u, Product) and u.right is v:
        return u.left
    w = Product(u, v)
    # With reduced factors the two collapses above are the only possible
    # violations, both at the new root.
    if not is_reduced(w):
        raise InternalInvariantError(f"product of reduced words is not reduced: {w!r}")
    return w


def normal_form(word: Word) -> Word:
    """The reduced word obtained by collapsing all squares, bottom-up."""
    if word.size < 2:
        return word
    try:
        return _NORMAL[word]
    except KeyError:
        pass
    if is_reduced(word):
        result = word
    else:
        result = reduce_product(normal_form(word.left), normal_form(word.right))
    _NORMAL[word] = result
    return result


def normal_form_chain(head: Word, factors: Iterable[Word]) -> Word:
    """Normal form of the left-associated product ``head f1 f2 ... fn``.

    Each argument is normalized first, so the fold only ever multiplies
    reduced words.
    """
    acc = normal_form(head)
    for f in factors:
        acc = reduce_product(acc, normal_form(f))
    return acc
