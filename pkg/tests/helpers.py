"""Brute-force oracles and exhaustive enumeration helpers for the test suite.

Everything here recomputes claims straight from the definitions — scanning
whole subtree sets, literal recursions, explicit family searches — on purpose
ignoring the package's memoized fast paths, so that agreement between the two
is evidence and not tautology.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from bol2 import (
    IDENTITY,
    Alphabet,
    Product,
    Word,
    compare,
    enumerate_basis,
    enumerate_words,
    is_reduced,
    left_assoc,
    normal_form,
    normal_form_chain,
    reduce_product,
    subwords,
    transpose,
    transpose_family,
    transpose_twice,
)

AB = Alphabet("ab")
ABC = Alphabet("abc")


def word_strategy(alphabet: Alphabet, max_size: int = 6):
    """Hypothesis strategy over arbitrary (not necessarily reduced) words."""
    letters = st.sampled_from(alphabet.letters)
    return st.recursive(
        letters, lambda children: st.builds(Product, children, children),
        max_leaves=max_size,
    )


def all_words_up_to(alphabet: Alphabet, max_len: int) -> list[Word]:
    return [
        w
        for n in range(1, max_len + 1)
        for w in enumerate_words(alphabet, n)
    ]


def iter_chains(alphabet: Alphabet, max_total: int, min_parts: int = 1):
    """Every tuple of words (a chain) whose sizes sum to at most ``max_total``."""

    def go(budget: int, parts: list[Word]):
        if len(parts) >= min_parts:
            yield tuple(parts)
        for size in range(1, budget + 1):
            for w in enumerate_words(alphabet, size):
                parts.append(w)
                yield from go(budget - size, parts)
                parts.pop()

    yield from go(max_total, [])


def distinct_runs(pool, length: int):
    """Tuples over ``pool`` with adjacent entries distinct."""
    for tup in itertools.product(pool, repeat=length):
        if all(a is not b for a, b in zip(tup, tup[1:])):
            yield tup


# ---------------------------------------------------------------------------
# literal re-implementations


def reduced_brute(word: Word) -> bool:
    """Scan every subtree for the shapes ``uu`` and ``(uv)v``."""
    if word.size == 0:
        return True
    for s in subwords(word):
        if isinstance(s, Product):
            if s.left is s.right:
                return False
            if isinstance(s.left, Product) and s.left.right is s.right:
                return False
    return True


def normal_form_brute(word: Word) -> Word:
    """The literal recursion, no memo tables, no reduced-word shortcut."""
    if word.size < 2:
        return word
    u = normal_form_brute(word.left)
    v = normal_form_brute(word.right)
    if u.size == 0:
        return v
    if v.size == 0:
        return u
    if u is v:
        return IDENTITY
    if isinstance(u, Product) and u.right is v:
        return u.left
    result = Product(u, v)
    assert reduced_brute(result), result
    return result


def candidate_brute(word: Word) -> bool:
    """The literal family-based definition: the whole transpose family is
    reduced, the word differs from its transpose, and it is the order-minimum
    of the family."""
    if word.size == 0:
        return False
    if word.size == 1:
        return True
    family = transpose_family(word)
    return (
        transpose(word) is not word
        and all(is_reduced(x) for x in family)
        and all(compare(word, x) <= 0 for x in family)
    )


def family_brute(word: Word, alphabet: Alphabet) -> frozenset[Word]:
    """Members of the transpose family by scanning every word of equal size
    for the defining condition (double transpose among this word's two)."""
    targets = {transpose(word), transpose_twice(word)}
    return frozenset(
        x for x in enumerate_words(alphabet, word.size)
        if transpose_twice(x) in targets
    )


def symmetric_brute_set(alphabet: Alphabet, max_len: int) -> frozenset[Word]:
    """All words of length <= max_len spelled by some odd palindrome
    ``h1 ... hm ... h1`` with m >= 2 over arbitrary words."""
    out: set[Word] = set()

    def walk(budget: int, parts: list[Word]):
        # ``parts`` holds h1..h(m-1); any word of size <= budget can sit in
        # the middle.  Total size is 2*(|h1| + ... + |h(m-1)|) + |hm|.
        if parts:
            for size in range(1, budget + 1):
                for mid in enumerate_words(alphabet, size):
                    out.add(left_assoc(tuple(parts) + (mid,) + tuple(parts[::-1])))
        for size in range(1, budget // 2 + 1):
            for w in enumerate_words(alphabet, size):
                parts.append(w)
                walk(budget - 2 * size, parts)
                parts.pop()

    walk(max_len, [])
    return frozenset(out)


def palindrome_index(
    alphabet: Alphabet, entry_max_len: int, half_max_len: int
) -> dict[Word, tuple[Word, ...]]:
    """Brute-force oracle: normal forms of *all* palindromic basis sequences
    within the bounds, asserting on the way that no two distinct sequences
    collide and that none collapses to the identity."""
    gens = enumerate_basis(alphabet, entry_max_len)
    index: dict[Word, tuple[Word, ...]] = {}
    for m in range(1, half_max_len + 1):
        for half in distinct_runs(gens, m):
            value = normal_form_chain(IDENTITY, half + half[-2::-1])
            assert value.size > 0, f"palindrome of {half} collapsed to identity"
            assert value not in index, (
                f"collision: {index[value]} and {half} both denote {value!r}"
            )
            index[value] = half
    return index


# ---------------------------------------------------------------------------
# normal-form algebra checks (each returns the number of cases examined and
# raises AssertionError with a witness on any failure)


def check_compose_split(alphabet: Alphabet, max_len: int) -> int:
    """nf(u v) == nf(nf(u) nf(v)) whenever |u| + |v| <= max_len."""
    cases = 0
    for usize in range(1, max_len):
        for u in enumerate_words(alphabet, usize):
            nfu = normal_form(u)
            for vsize in range(1, max_len - usize + 1):
                for v in enumerate_words(alphabet, vsize):
                    cases += 1
                    assert normal_form(Product(u, v)) is reduce_product(
                        nfu, normal_form(v)
                    ), (u, v)
    return cases


def check_square_collapse(alphabet: Alphabet, max_len: int) -> int:
    """nf((u v) v) == nf(u) whenever |u| + 2|v| <= max_len."""
    cases = 0
    for vsize in range(1, max_len // 2 + 1):
        for v in enumerate_words(alphabet, vsize):
            for usize in range(1, max_len - 2 * vsize + 1):
                for u in enumerate_words(alphabet, usize):
                    cases += 1
                    assert normal_form(Product(Product(u, v), v)) is normal_form(
                        u
                    ), (u, v)
    return cases


def check_right_congruence(alphabet: Alphabet, max_len: int) -> int:
    """nf(u) == nf(v)  iff  nf(u w) == nf(v w), for all |u w|, |v w| <= max_len."""
    cases = 0
    for wsize in range(1, max_len):
        pool = all_words_up_to(alphabet, max_len - wsize)
        for w in enumerate_words(alphabet, wsize):
            shifted = [normal_form(Product(u, w)) for u in pool]
            plain = [normal_form(u) for u in pool]
            for i, u in enumerate(pool):
                for j in range(i + 1, len(pool)):
                    cases += 1
                    assert (plain[i] is plain[j]) == (shifted[i] is shifted[j]), (
                        u,
                        pool[j],
                        w,
                    )
    return cases


def check_collapse_reversal(alphabet: Alphabet, max_chain: int) -> int:
    """If nf(v1 ... vn) is a letter ``a``, then nf(a vn ... v1) == 1; chains
    with sizes summing to max_chain keep every constructed word within
    max_chain + 1 letters."""
    cases = 0
    for chain in iter_chains(alphabet, max_chain):
        value = normal_form(left_assoc(chain))
        if value.size != 1:
            continue
        cases += 1
        back = left_assoc((value,) + chain[::-1])
        assert normal_form(back) is IDENTITY, chain
    return cases


def check_left_cancellation(alphabet: Alphabet, max_len: int) -> int:
    """nf(u v) == nf(u w) implies nf(v) == nf(w), for all |u v|, |u w| <= max_len."""
    cases = 0
    for usize in range(1, max_len):
        pool = all_words_up_to(alphabet, max_len - usize)
        for u in enumerate_words(alphabet, usize):
            appended = [normal_form(Product(u, v)) for v in pool]
            plain = [normal_form(v) for v in pool]
            for i in range(len(pool)):
                for j in range(i + 1, len(pool)):
                    cases += 1
                    if appended[i] is appended[j]:
                        assert plain[i] is plain[j], (u, pool[i], pool[j])
    return cases
