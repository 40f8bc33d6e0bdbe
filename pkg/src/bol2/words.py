"""Non-associative binary words over an ordered alphabet.

A word is a full binary tree whose leaves are letters; the product of two
words ``u`` and ``v`` is the tree ``(uv)``.  The product is *not*
associative: ``(ab)c`` and ``a(bc)`` are different words.  The empty word
``1`` acts as a multiplicative identity but never occurs inside a larger
word.  An unparenthesized run of factors associates to the left, so the
string ``bab`` denotes ``(ba)b``.

Every word has a unique maximal left-associated decomposition
``v = v1 v2 ... vm`` (descend through left children until a letter is
reached); we call the tuple ``(v1, ..., vm)`` the *spine* of ``v`` and ``m``
its norm.  Reversing the spine gives the transpose ``v^t``; transposing twice
reverses the finer decomposition obtained by also unfolding the last spine
factor.

Words are interned: building the same tree twice yields the *same* object,
so equality is ``is``, hashing is by id, and the memo tables of the layers
above (normal forms, basis membership, canonical forms) are plain dicts.

>>> ab = Alphabet("ab")
>>> w = parse("((ba)b)a", ab)
>>> [render(f, ab) for f in spine_factors(w)]
['b', 'a', 'b', 'a']
>>> render(transpose(w), ab)
'((ab)a)b'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from typing import Iterable, Iterator

__all__ = [
    "Word",
    "Letter",
    "Product",
    "IDENTITY",
    "Alphabet",
    "WordSyntaxError",
    "parse",
    "render",
    "left_assoc",
    "spine_factors",
    "fine_factors",
    "transpose",
    "transpose_twice",
    "transpose_family",
    "transpose_min",
    "is_symmetric",
    "subwords",
    "compare",
    "word_key",
    "enumerate_words",
]

# Letters outside this range fall back to x0, x1, ... in debugging output.
_DEBUG_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class Word:
    """Base class of all words; concrete instances are :class:`Letter`,
    :class:`Product`, or the :data:`IDENTITY` singleton."""

    __slots__ = ()

    size: int  # number of letters (0 for the identity word)

    def __repr__(self) -> str:
        return f"Word({_debug_str(self)!r})"


class _Identity(Word):
    __slots__ = ()
    size = 0


IDENTITY: Word = _Identity()
"""The empty word: neutral for the product, never a factor of a larger word."""


class Letter(Word):
    """A single letter, identified by its rank in the alphabet."""

    __slots__ = ("index",)
    size = 1

    _interned: dict[int, "Letter"] = {}

    def __new__(cls, index: int) -> "Letter":
        try:
            return cls._interned[index]
        except KeyError:
            pass
        if index < 0:
            raise ValueError("letter index must be non-negative")
        self = object.__new__(cls)
        self.index = index
        cls._interned[index] = self
        return self


class Product(Word):
    """The word ``(uv)``.  Neither factor may be the identity word."""

    __slots__ = ("left", "right", "size")

    _interned: dict[tuple[int, int], "Product"] = {}

    def __new__(cls, left: Word, right: Word) -> "Product":
        try:
            return cls._interned[id(left), id(right)]
        except KeyError:
            pass
        if left.size == 0 or right.size == 0:
            raise ValueError("the identity word cannot be a factor")
        self = object.__new__(cls)
        self.left = left
        self.right = right
        self.size = left.size + right.size
        # Children are referenced by the new node (and the intern table keeps
        # every word alive), so keying on object ids is stable.
        cls._interned[id(left), id(right)] = self
        return self


def _debug_str(word: Word) -> str:
    if word.size == 0:
        return "1"
    if isinstance(word, Letter):
        i = word.index
        return _DEBUG_LETTERS[i] if i < len(_DEBUG_LETTERS) else f"x{i}"

    def go(w: Word, top: bool) -> str:
        if isinstance(w, Letter):
            return _debug_str(w)
        s = go(w.left, False) + go(w.right, False)
        return s if top else f"({s})"

    return go(word, True)


@dataclass(frozen=True)
class Alphabet:
    """An ordered alphabet; a letter's rank is its position in ``symbols``."""

    symbols: str

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("alphabet must contain at least one letter")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"alphabet has repeated letters: {self.symbols!r}")
        reserved = set(self.symbols) & set("()1") | {c for c in self.symbols if c.isspace()}
        if reserved:
            raise ValueError(f"reserved characters in alphabet: {sorted(reserved)}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter(i) for i in range(len(self.symbols)))

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(self)

    def letter(self, symbol: str) -> Letter:
        index = self.symbols.find(symbol)
        if index < 0:
            raise ValueError(f"unknown letter {symbol!r}")
        return Letter(index)

    def name(self, index: int) -> str:
        if not 0 <= index < len(self.symbols):
            raise ValueError(f"letter #{index} is outside alphabet {self.symbols!r}")
        return self.symbols[index]


class WordSyntaxError(ValueError):
    """Malformed word string; ``position`` is the 0-based offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse(text: str, alphabet: Alphabet) -> Word:
    """Parse a word string.

    Letters and parenthesized groups are juxtaposed; an unparenthesized run
    associates to the left (``bab`` is ``(ba)b``).  The single character
    ``1`` denotes the identity word.  Whitespace between factors is ignored.
    """
    s = text.strip()
    if s == "1":
        return IDENTITY
    word, pos = _parse_run(s, 0, alphabet)
    if pos != len(s):
        raise WordSyntaxError("unmatched ')'", pos)
    return word


def _parse_run(s: str, pos: int, alphabet: Alphabet) -> tuple[Word, int]:
    factors: list[Word] = []
    while pos < len(s) and s[pos] != ")":
        ch = s[pos]
        if ch.isspace():
            pos += 1
        elif ch == "(":
            inner, pos = _parse_run(s, pos + 1, alphabet)
            if pos >= len(s):
                raise WordSyntaxError("unclosed '('", pos)
            pos += 1  # consume ')'
            factors.append(inner)
        else:
            try:
                factors.append(alphabet.letter(ch))
            except ValueError:
                raise WordSyntaxError(f"unknown letter {ch!r}", pos) from None
            pos += 1
    if not factors:
        raise WordSyntaxError("empty word", pos)
    return left_assoc(factors), pos


def render(word: Word, alphabet: Alphabet) -> str:
    """Inverse of :func:`parse`: letters bare, every composite factor
    parenthesized, the top level bare.  The identity word renders as ``1``."""
    if word.size == 0:
        return "1"

    def go(w: Word, top: bool) -> str:
        if isinstance(w, Letter):
            return alphabet.name(w.index)
        s = go(w.left, False) + go(w.right, False)
        return s if top else f"({s})"

    return go(word, True)


def left_assoc(factors: Iterable[Word]) -> Word:
    """The left-associated product ``((f1 f2) f3) ... fn`` of the factors;
    the empty product is the identity word."""
    it = iter(factors)
    try:
        acc = next(it)
    except StopIteration:
        return IDENTITY
    for f in it:
        acc = Product(acc, f)
    return acc


def spine_factors(word: Word) -> tuple[Word, ...]:
    """The maximal left-associated decomposition ``v = v1 v2 ... vm``.

    Unique, with ``v1`` always a letter.  The identity word has no spine.
    """
    if word.size == 0:
        raise ValueError("the identity word has no spine")
    rev = []
    while isinstance(word, Product):
        rev.append(word.right)
        word = word.left
    rev.append(word)
    return tuple(reversed(rev))


def fine_factors(word: Word) -> tuple[Word, ...]:
    """The spine with its last factor unfolded into its own reversed spine.

    This is exactly the spine of :func:`transpose_twice`, i.e. the finest
    decomposition reachable by transposing."""
    factors = spine_factors(word)
    return factors[:-1] + spine_factors(factors[-1])[::-1]


def transpose(word: Word) -> Word:
    """Reverse the spine: ``v1 v2 ... vm  ->  vm ... v2 v1``."""
    return left_assoc(spine_factors(word)[::-1])


def transpose_twice(word: Word) -> Word:
    """``transpose(transpose(word))``; fixes ``word`` exactly when its last
    spine factor is a letter."""
    return transpose(transpose(word))


def transpose_family(word: Word) -> frozenset[Word]:
    """All words whose double transpose is one of this word's two transposes.

    With fine factors ``(y1, ..., yk)`` these are the two transposes together
    with the split products ``(yk...yi)(y1...y<i)`` for ``3 <= i <= k`` and
    ``(y1...y<i)(yk...yi)`` for ``2 <= i <= k-1``; the word itself is always
    a member.  For a letter the family is the singleton ``{word}``.
    """
    t = transpose(word)
    tt = transpose(t)
    fine = fine_factors(word)
    k = len(fine)
    family = {t, tt}
    for i in range(3, k + 1):
        head = left_assoc(fine[i - 1:][::-1])
        family.add(Product(head, left_assoc(fine[: i - 1])))
    for i in range(2, k):
        tail = left_assoc(fine[i - 1:][::-1])
        family.add(Product(left_assoc(fine[: i - 1]), tail))
    return frozenset(family)


def transpose_min(word: Word) -> Word:
    """The order-minimum of the two transposes (equivalently, of the whole
    transpose family)."""
    t = transpose(word)
    tt = transpose(t)
    return t if compare(t, tt) <= 0 else tt


def is_symmetric(word: Word) -> bool:
    """Whether the word is an odd palindromic product ``u1 u2 ... um ... u2 u1``
    with at least three factors.

    Every left-associated factorization coarsens the spine, so it suffices to
    try each split of the spine into a head run (the candidate ``u1``)
    followed by an even number of single factors.
    """
    if word.size < 3:
        return False
    factors = spine_factors(word)
    r = len(factors)
    for j in range(1, r - 1):
        if (r - j) % 2:
            continue
        candidate = (left_assoc(factors[:j]),) + factors[j:]
        if candidate == candidate[::-1]:
            return True
    return False


def subwords(word: Word) -> frozenset[Word]:
    """Every subtree of the word, the word itself included."""
    if word.size == 0:
        raise ValueError("the identity word has no subwords")
    seen: set[Word] = set()
    stack = [word]
    while stack:
        w = stack.pop()
        if w in seen:
            continue
        seen.add(w)
        if isinstance(w, Product):
            stack += (w.left, w.right)
    return frozenset(seen)


def compare(u: Word, v: Word) -> int:
    """Total order on words: shorter first; same-length letters by rank;
    same-length composites by right factor, then left.  Returns -1, 0, or 1.

    The identity word (length 0) sorts below everything else.
    """
    if u is v:
        return 0
    if u.size != v.size:
        return -1 if u.size < v.size else 1
    if isinstance(u, Letter):
        return -1 if u.index < v.index else 1
    return compare(u.right, v.right) or compare(u.left, v.left)


word_key = cmp_to_key(compare)
"""Sort key for :func:`compare` (use as ``sorted(words, key=word_key)``)."""


@lru_cache(maxsize=None)
def _all_words(n_letters: int, size: int) -> tuple[Word, ...]:
    if size == 1:
        return tuple(Letter(i) for i in range(n_letters))
    out: list[Word] = []
    for left_size in range(1, size):
        for left in _all_words(n_letters, left_size):
            for right in _all_words(n_letters, size - left_size):
                out.append(Product(left, right))
    return tuple(out)


def enumerate_words(alphabet: Alphabet, size: int) -> tuple[Word, ...]:
    """Every word with exactly ``size`` letters over the alphabet
    (Catalan(size-1) * n**size of them)."""
    if size < 1:
        raise ValueError("word size must be at least 1")
    return _all_words(len(alphabet), size)
