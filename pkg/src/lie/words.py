"""Lyndon words, standard bracketings and the Witt dimension formula.

Words are tuples of letter indices into an ordered generator list; the
letter order is the generator order and words compare lexicographically
(Python tuple order, so a proper prefix is smaller).
"""

from __future__ import annotations

import functools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from sympy import divisors
from sympy.ntheory import mobius

Word = tuple[int, ...]


def is_lyndon(word: Word) -> bool:
    """True iff ``word`` is nonempty and strictly smaller than each of its proper suffixes."""
    if not word:
        return False
    return all(word < word[i:] for i in range(1, len(word)))


def lyndon_words(alphabet_size: int, length: int) -> Iterator[Word]:
    """Yields the Lyndon words of exactly ``length`` letters in lexicographic order.

    Duval's generation algorithm: it visits every Lyndon word of length at
    most ``length`` in increasing order.
    """
    if alphabet_size < 1 or length < 1:
        return
    word = [-1]
    while word:
        word[-1] += 1
        period = len(word)
        if period == length:
            yield tuple(word)
        while len(word) < length:
            word.append(word[-period])
        while word and word[-1] == alphabet_size - 1:
            word.pop()


@functools.lru_cache(maxsize=None)
def standard_factorization(word: Word) -> tuple[Word, Word]:
    """Splits a Lyndon word of length >= 2 as ``(u, v)`` with ``v`` its smallest proper suffix.

    The smallest proper suffix is the longest proper Lyndon suffix, and both
    factors are Lyndon words with ``u < v``.
    """
    if len(word) < 2:
        raise ValueError(f"word {word} has no standard factorization")
    split = min(range(1, len(word)), key=lambda i: word[i:])
    return word[:split], word[split:]


@functools.lru_cache(maxsize=None)
def witt_dim(num_generators: int, degree: int) -> int:
    """Dimension of the degree-``degree`` part of a free Lie algebra on ``num_generators`` generators.

    Necklace counting: ``(1/n) * sum(mu(d) * k**(n/d) for d | n)``.
    """
    if num_generators < 1 or degree < 1:
        raise ValueError("witt_dim needs at least one generator and degree >= 1")
    total = sum(int(mobius(d)) * num_generators ** (degree // d) for d in divisors(degree))
    return total // degree


@dataclass(frozen=True)
class BracketWord:
    """An iterated bracket of generators: a single letter or a pair ``[left, right]``."""

    letter: int | None = None
    left: BracketWord | None = None
    right: BracketWord | None = None

    @classmethod
    def leaf(cls, letter: int) -> BracketWord:
        return cls(letter=letter)

    @classmethod
    def pair(cls, left: BracketWord, right: BracketWord) -> BracketWord:
        return cls(left=left, right=right)

    @property
    def is_leaf(self) -> bool:
        return self.letter is not None

    @property
    def letters(self) -> Word:
        """The generator sequence (foliage) of the bracket."""
        if self.letter is not None:
            return (self.letter,)
        assert self.left is not None and self.right is not None
        return self.left.letters + self.right.letters

    @property
    def length(self) -> int:
        return len(self.letters)

    def weight(self, weights: Sequence[int]) -> int:
        """Sum of the generator weights of the occurring letters."""
        return sum(weights[letter] for letter in self.letters)

    def render(self, names: Sequence[str]) -> str:
        """Renders as ``x`` or ``[x,[x,y]]`` using generator names."""
        if self.letter is not None:
            return names[self.letter]
        assert self.left is not None and self.right is not None
        return f"[{self.left.render(names)},{self.right.render(names)}]"


@functools.lru_cache(maxsize=None)
def standard_bracketing(word: Word) -> BracketWord:
    """The standard bracketing of a Lyndon word: recursive on the standard factorization."""
    if len(word) == 1:
        return BracketWord.leaf(word[0])
    left, right = standard_factorization(word)
    return BracketWord.pair(standard_bracketing(left), standard_bracketing(right))


def is_basis_word(bracket: BracketWord) -> bool:
    """True iff ``bracket`` is a Lyndon basis element: Lyndon foliage with its standard bracketing."""
    letters = bracket.letters
    return is_lyndon(letters) and bracket == standard_bracketing(letters)
