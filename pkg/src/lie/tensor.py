"""Truncated free associative algebra over the rationals.

Noncommutative polynomials are sparse maps from words to coefficients;
products drop every word longer than the truncation length. This is the
ambient algebra for the exponential and logarithm behind group products,
and for moving Lie elements in and out of associative form.
"""

from __future__ import annotations

import functools
import math
from collections.abc import Mapping
from fractions import Fraction

from .exceptions import ConsistencyError
from .free_lie import FreeLieAlgebra, LieElement
from .words import Word, is_lyndon, standard_factorization

Polynomial = dict[Word, Fraction]


def add(a: Mapping[Word, Fraction], b: Mapping[Word, Fraction], factor: Fraction | int = 1) -> Polynomial:
    """Returns ``a + factor * b``."""
    out = dict(a)
    for word, coeff in b.items():
        value = out.get(word, Fraction(0)) + factor * coeff
        if value:
            out[word] = value
        else:
            out.pop(word, None)
    return out


def multiply(a: Mapping[Word, Fraction], b: Mapping[Word, Fraction], max_length: int) -> Polynomial:
    """Concatenation product truncated at ``max_length`` letters."""
    out: Polynomial = {}
    for u, cu in a.items():
        for v, cv in b.items():
            if len(u) + len(v) > max_length:
                continue
            word = u + v
            value = out.get(word, Fraction(0)) + cu * cv
            if value:
                out[word] = value
            else:
                out.pop(word, None)
    return out


def commutator(a: Mapping[Word, Fraction], b: Mapping[Word, Fraction], max_length: int) -> Polynomial:
    return add(multiply(a, b, max_length), multiply(b, a, max_length), -1)


def exp(a: Mapping[Word, Fraction], max_length: int) -> Polynomial:
    """``sum(a**k / k!)`` for ``a`` without constant term."""
    if () in a:
        raise ValueError("exp needs a polynomial without constant term")
    result: Polynomial = {(): Fraction(1)}
    power: Polynomial = {(): Fraction(1)}
    for k in range(1, max_length + 1):
        power = multiply(power, a, max_length)
        if not power:
            break
        result = add(result, power, Fraction(1, math.factorial(k)))
    return result


def log(a: Mapping[Word, Fraction], max_length: int) -> Polynomial:
    """``sum((-1)**(k+1) * (a - 1)**k / k)`` for ``a`` with constant term 1."""
    if a.get((), Fraction(0)) != 1:
        raise ValueError("log needs a polynomial with constant term 1")
    shifted = add(a, {(): Fraction(1)}, -1)
    result: Polynomial = {}
    power: Polynomial = {(): Fraction(1)}
    for k in range(1, max_length + 1):
        power = multiply(power, shifted, max_length)
        if not power:
            break
        result = add(result, power, Fraction((-1) ** (k + 1), k))
    return result


@functools.lru_cache(maxsize=None)
def _expand_word(word: Word) -> tuple[tuple[Word, Fraction], ...]:
    """Associative expansion of the standard bracketing of a Lyndon word."""
    if len(word) == 1:
        return ((word, Fraction(1)),)
    left, right = standard_factorization(word)
    lhs = dict(_expand_word(left))
    rhs = dict(_expand_word(right))
    return tuple(sorted(commutator(lhs, rhs, len(word)).items()))


def to_associative(element: LieElement) -> Polynomial:
    """Expands every bracket ``[a, b]`` as ``ab - ba``."""
    out: Polynomial = {}
    for word, coeff in element.coeffs.items():
        out = add(out, dict(_expand_word(word)), coeff)
    return out


def from_associative(polynomial: Mapping[Word, Fraction], algebra: FreeLieAlgebra) -> LieElement:
    """Recovers the Lie element whose associative expansion is ``polynomial``.

    The expansion of a basis bracket is its Lyndon word plus lexicographically
    larger words of the same letters, so the smallest remaining word always
    names the next basis coefficient.

    Raises:
        ConsistencyError: If the polynomial is not a Lie polynomial.
    """
    remaining = {w: Fraction(c) for w, c in polynomial.items() if c and len(w) <= algebra.class_cap}
    if () in remaining:
        raise ConsistencyError("a Lie polynomial has no constant term")
    coeffs: dict[Word, Fraction] = {}
    while remaining:
        word = min(remaining, key=lambda w: (len(w), w))
        if not is_lyndon(word):
            raise ConsistencyError(f"not a Lie polynomial: leading word {word} is not Lyndon")
        coeff = remaining[word]
        coeffs[word] = coeff
        remaining = add(remaining, dict(_expand_word(word)), -coeff)
    return algebra.element(coeffs)
