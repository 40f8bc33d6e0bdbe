"""Loop multiplication on the carrier via canonical palindromic forms.

Every non-identity carrier element ``g`` is the normal form of exactly one
odd palindrome ``h1 h2 ... hm ... h2 h1`` whose entries are basis words with
adjacent entries distinct (:func:`symmetric_form` computes it, returning the
half ``(h1, ..., hm)``).  The product is then

    x * y  =  normal form of  x h1 h2 ... hm ... h2 h1,

where the palindrome is the one denoting ``y``.  With the identity word
adjoined this operation makes the carrier a Bol loop in which every element
is its own inverse: ``x*x = 1`` and ``(x*y)*y = x``, so right division is
right multiplication, while left division has no closed form and is done by
bounded search.

The canonical form is found by steering a word toward its transposes:

* basis members are their own (singleton) form;
* if the transpose is not reduced, recurse on its normal form and wrap the
  result in the reversed spine ``(as, ..., a1)`` of ``g``;
* else if the double transpose is not reduced, recurse on its normal form
  and wrap in ``(as, bl, ..., b1)`` where ``(b1, ..., bl)`` is the spine of
  the last spine factor ``as``;
* else if the two transposes differ, the one lying in the basis is the
  one-entry core (wrapped as above);
* else the common transpose is an odd palindromic product of basis words,
  and its unique such factorization is the core.

Wrapping may create equal adjacent entries where wrap meets core; those
cancel in pairs (the palindrome squares them away), which can also merge the
two middle entries into one.  Every computed form is checked to denote ``g``
before it is memoized.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basis import SHARED_CACHE, BasisCache, enumerate_loop_words, in_basis, in_loop
from .normalize import (
    InternalInvariantError,
    is_reduced,
    normal_form,
    normal_form_chain,
)
from .words import IDENTITY, Alphabet, Word, left_assoc, spine_factors, transpose

__all__ = [
    "PalindromicForm",
    "symmetric_form",
    "mul",
    "rdiv",
    "ldiv",
    "element_order_two",
]


@dataclass(frozen=True)
class PalindromicForm:
    """An odd palindrome ``h1 ... hm ... h1`` over the basis, stored as its
    half ``(h1, ..., hm)``; adjacent entries are distinct."""

    half: tuple[Word, ...]

    def __post_init__(self) -> None:
        if not self.half:
            raise ValueError("a palindromic form has at least one entry")
        for a, b in zip(self.half, self.half[1:]):
            if a is b:
                raise ValueError(f"adjacent entries must differ: {a!r}")
        for h in self.half:
            if not in_basis(h):
                raise ValueError(f"entry is not a basis member: {h!r}")

    @property
    def sequence(self) -> tuple[Word, ...]:
        """The full palindrome ``h1, ..., hm, ..., h1``."""
        return self.half + self.half[-2::-1]

    def as_word(self) -> Word:
        """The (unreduced) left-associated word spelled by the palindrome."""
        return left_assoc(self.sequence)


def _unfold_wrap(last_factor: Word) -> tuple[Word, ...]:
    # (as, bl, ..., b1): multiplying this prefix into the double transpose
    # consumes its leading run b1 ... bl as one step at a time, then re-attaches as.
    return (last_factor,) + spine_factors(last_factor)[::-1]


def _cancel_junction(wrap: tuple[Word, ...], core: tuple[Word, ...]) -> tuple[Word, ...]:
    """Concatenate two half-sequences, cancelling equal entries at the seam.

    Inside the full palindrome an equal adjacent pair squares to the identity;
    when the seam eats through the whole core, the two middle entries merge
    into one.
    """
    w = list(wrap)
    c = list(core)
    while w and len(c) > 1 and w[-1] is c[0]:
        w.pop()
        del c[0]
    if w and len(c) == 1 and w[-1] is c[0]:
        del c[0]
    return tuple(w + c)


def _palindromic_half(word: Word, cache: BasisCache) -> tuple[Word, ...]:
    """The half of the unique odd palindromic spine split of ``word`` whose
    entries are all basis members."""
    factors = spine_factors(word)
    r = len(factors)
    found: tuple[Word, ...] | None = None
    for j in range(1, r - 1):
        if (r - j) % 2:
            continue
        cand = (left_assoc(factors[:j]),) + factors[j:]
        if cand != cand[::-1]:
            continue
        if not all(in_basis(x, cache) for x in cand):
            continue
        if found is not None:
            raise InternalInvariantError(f"ambiguous palindromic split: {word!r}")
        found = cand[: (len(cand) + 1) // 2]
    if found is None:
        raise InternalInvariantError(f"no palindromic split over the basis: {word!r}")
    return found


def symmetric_form(element: Word, cache: BasisCache = SHARED_CACHE) -> PalindromicForm:
    """The canonical palindromic form of a non-identity carrier element."""
    if element.size == 0:
        raise ValueError("the identity word has no palindromic form")
    try:
        return cache.forms[element]
    except KeyError:
        pass
    if not in_loop(element, cache):
        raise ValueError(f"not a carrier element: {element!r}")

    if in_basis(element, cache):
        form = PalindromicForm((element,))
    else:
        factors = spine_factors(element)
        wrap = factors[::-1]
        t = transpose(element)
        tt = transpose(t)
        if not is_reduced(t):
            core = symmetric_form(_shrunk(t, element, cache), cache).half
        elif not is_reduced(tt):
            wrap = _unfold_wrap(factors[-1])
            core = symmetric_form(_shrunk(tt, element, cache), cache).half
        elif t is not tt:
            if in_basis(t, cache):
                core = (t,)
            elif in_basis(tt, cache):
                wrap = _unfold_wrap(factors[-1])
                core = (tt,)
            else:
                raise InternalInvariantError(
                    f"neither transpose of {element!r} is a basis member"
                )
        else:
            # The common transpose is symmetric: extract its palindrome.
            core = _palindromic_half(t, cache)
        form = PalindromicForm(_cancel_junction(wrap, core))

    if normal_form_chain(IDENTITY, form.sequence) is not element:
        raise InternalInvariantError(
            f"form {form.half!r} does not denote {element!r}"
        )
    cache.forms[element] = form
    return form


def _shrunk(transposed: Word, element: Word, cache: BasisCache) -> Word:
    # Normal form of a non-reduced transpose: strictly shorter, still in the
    # carrier and non-identity, so the recursion terminates.
    reduced = normal_form(transposed)
    if reduced.size == 0 or reduced.size >= element.size or not in_loop(reduced, cache):
        raise InternalInvariantError(
            f"transpose of {element!r} reduced to unusable {reduced!r}"
        )
    return reduced


def mul(x: Word, y: Word, cache: BasisCache = SHARED_CACHE) -> Word:
    """The loop product: fold the palindrome denoting ``y`` into ``x``.

    Both operands must be carrier elements (not checked here; the command
    line front end validates its inputs)."""
    if y.size == 0:
        return x
    if x.size == 0:
        return y
    return normal_form_chain(x, symmetric_form(y, cache).sequence)


def rdiv(b: Word, a: Word, cache: BasisCache = SHARED_CACHE) -> Word:
    """The unique ``x`` with ``x * a = b``; since ``(x*a)*a = x`` this is just
    ``b * a``."""
    return mul(b, a, cache)


def ldiv(
    a: Word,
    b: Word,
    alphabet: Alphabet,
    cache: BasisCache = SHARED_CACHE,
    max_len: int | None = None,
) -> Word | None:
    """The ``x`` with ``a * x = b``, by search over carrier elements of length
    at most ``max_len`` (default ``|a| + |b| + 2``).  Returns ``None`` when no
    solution exists within the bound — the bound, not the loop, may be the
    limiting factor."""
    if a.size == 0:
        return b
    if b.size == 0:
        return a
    if a is b:
        return IDENTITY
    bound = max_len if max_len is not None else a.size + b.size + 2
    for x in enumerate_loop_words(alphabet, bound, cache):
        if mul(a, x, cache) is b:
            return x
    return None


def element_order_two(x: Word, cache: BasisCache = SHARED_CACHE) -> bool:
    """Whether the element squares to the identity (true for every carrier
    element; the identity word trivially included)."""
    return mul(x, x, cache).size == 0
