"""Free Lie algebras on weighted generators over the rationals.

Elements are exact linear combinations of Lyndon basis words (standard
bracketings of Lyndon words), truncated at a class cap: words longer than
the cap are dropped, so an algebra with cap ``c`` is L(V)/Γ_{c+1}.
"""

from __future__ import annotations

import functools
import logging
import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import override

from .exceptions import ExpressionError, MismatchError, PresentationError, UnknownGeneratorError
from .linalg import SparseVector
from .words import BracketWord, Word, is_lyndon, lyndon_words, standard_bracketing, standard_factorization

logger = logging.getLogger(__name__)

_NAME_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def format_rational(value: Fraction | int) -> str:
    """Lowest terms with a ``/`` separator; the sign sits on the numerator."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Generator:
    """A named generator with a positive weight."""

    name: str
    weight: int = 1

    def __post_init__(self) -> None:
        if not _NAME_PATTERN.fullmatch(self.name):
            raise PresentationError(f"invalid generator name '{self.name}'")
        if self.weight < 1:
            raise PresentationError(f"generator '{self.name}' has weight {self.weight}; weights must be >= 1")


# --- Formal bracket expressions ---
@dataclass(frozen=True)
class Symbol:
    """A generator occurrence in a formal expression."""

    name: str


@dataclass(frozen=True)
class Bracket:
    """A formal bracket ``[left, right]``."""

    left: Expr
    right: Expr


@dataclass(frozen=True)
class Combination:
    """A formal rational linear combination of expressions."""

    terms: tuple[tuple[Fraction, Expr], ...]


Expr = Symbol | Bracket | Combination


@functools.lru_cache(maxsize=None)
def _bracket_words(u: Word, v: Word) -> tuple[tuple[Word, Fraction], ...]:
    """Normal form of ``[P_u, P_v]`` for Lyndon words ``u``, ``v``.

    ``[P_u, P_v]`` is itself a basis element when ``u < v`` and either ``u``
    is a letter or the right standard factor of ``u`` is ``>= v``. Otherwise
    ``u = u1 u2`` and ``[[P_u1, P_u2], P_v] = [P_u1, [P_u2, P_v]] - [P_u2, [P_u1, P_v]]``,
    which recurses on strictly better-placed pairs.
    """
    if u == v:
        return ()
    if u > v:
        return tuple((w, -c) for w, c in _bracket_words(v, u))
    if len(u) == 1:
        return ((u + v, Fraction(1)),)
    u1, u2 = standard_factorization(u)
    if u2 >= v:
        return ((u + v, Fraction(1)),)

    acc: dict[Word, Fraction] = {}
    for inner, inner_coeff in _bracket_words(u2, v):
        for word, coeff in _bracket_words(u1, inner):
            acc[word] = acc.get(word, Fraction(0)) + inner_coeff * coeff
    for inner, inner_coeff in _bracket_words(u1, v):
        for word, coeff in _bracket_words(u2, inner):
            acc[word] = acc.get(word, Fraction(0)) - inner_coeff * coeff
    return tuple(sorted((w, c) for w, c in acc.items() if c))


class FreeLieAlgebra:
    """The free Lie algebra on an ordered list of generators, truncated at ``class_cap``.

    Two algebras compare equal when they have the same generators (names and
    weights, in order) and the same class cap; elements of equal algebras
    can be mixed freely.
    """

    def __init__(self, generators: Sequence[Generator], class_cap: int) -> None:
        if not generators:
            raise PresentationError("a free Lie algebra needs at least one generator")
        if class_cap < 1:
            raise PresentationError(f"class cap must be >= 1, got {class_cap}")
        names = [g.name for g in generators]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise PresentationError(f"duplicate generator names: {', '.join(duplicates)}")
        self._generators = tuple(generators)
        self._index = {g.name: i for i, g in enumerate(self._generators)}
        self._class_cap = class_cap
        self._basis: dict[int, tuple[Word, ...]] = {}
        self._positions: dict[int, dict[Word, int]] = {}

    # --- Identity ---
    @property
    def generators(self) -> tuple[Generator, ...]:
        return self._generators

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self._generators)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(g.weight for g in self._generators)

    @property
    def class_cap(self) -> int:
        return self._class_cap

    @property
    def rank(self) -> int:
        """Number of generators."""
        return len(self._generators)

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeLieAlgebra):
            return NotImplemented
        return self._generators == other._generators and self._class_cap == other._class_cap

    @override
    def __hash__(self) -> int:
        return hash((self._generators, self._class_cap))

    @override
    def __repr__(self) -> str:
        gens = ", ".join(g.name if g.weight == 1 else f"{g.name}:{g.weight}" for g in self._generators)
        return f"FreeLieAlgebra({gens}; class {self._class_cap})"

    def with_class_cap(self, class_cap: int) -> FreeLieAlgebra:
        """The same generators at another class cap."""
        return FreeLieAlgebra(self._generators, class_cap)

    # --- Basis ---
    def basis_words(self, degree: int) -> tuple[Word, ...]:
        """Lyndon words of length ``degree`` in lexicographic order."""
        if degree not in self._basis:
            self._basis[degree] = tuple(lyndon_words(self.rank, degree))
        return self._basis[degree]

    def lyndon_basis(self, degree: int) -> list[BracketWord]:
        """Basis brackets of length ``degree`` in the order of :meth:`basis_words`."""
        return [standard_bracketing(w) for w in self.basis_words(degree)]

    def position(self, word: Word) -> int:
        """Index of a Lyndon word within the basis of its degree."""
        degree = len(word)
        if degree not in self._positions:
            self._positions[degree] = {w: i for i, w in enumerate(self.basis_words(degree))}
        return self._positions[degree][word]

    def dimension(self, degree: int) -> int:
        return len(self.basis_words(degree))

    def word_weight(self, word: Word) -> int:
        return sum(self._generators[letter].weight for letter in word)

    def render_word(self, word: Word) -> str:
        return standard_bracketing(word).render(self.names)

    # --- Elements ---
    def zero(self) -> LieElement:
        return LieElement(self, {})

    def generator(self, name: str) -> LieElement:
        """The element for a generator name."""
        if name not in self._index:
            raise UnknownGeneratorError(name)
        return LieElement(self, {(self._index[name],): Fraction(1)})

    def letter(self, name: str) -> int:
        if name not in self._index:
            raise UnknownGeneratorError(name)
        return self._index[name]

    def element(self, coeffs: Mapping[Word, Fraction | int]) -> LieElement:
        """Builds an element from Lyndon-word coordinates; words above the cap are dropped."""
        clean: dict[Word, Fraction] = {}
        for word, coeff in coeffs.items():
            if not is_lyndon(word) or any(not 0 <= letter < self.rank for letter in word):
                raise ExpressionError(f"{word} is not a Lyndon word over {self.rank} letters")
            if coeff and len(word) <= self._class_cap:
                clean[word] = Fraction(coeff)
        return LieElement(self, clean)

    def from_vector(self, degree: int, vector: Mapping[int, Fraction]) -> LieElement:
        """Element of a single degree from basis-index coordinates."""
        words = self.basis_words(degree)
        return self.element({words[i]: c for i, c in vector.items()})

    def bracket(self, a: LieElement, b: LieElement) -> LieElement:
        """Bilinear bracket, normal-formed and truncated at the class cap."""
        self._check_owner(a)
        self._check_owner(b)
        acc: dict[Word, Fraction] = {}
        for u, cu in a.coeffs.items():
            for v, cv in b.coeffs.items():
                if len(u) + len(v) > self._class_cap:
                    continue
                for word, coeff in _bracket_words(u, v):
                    acc[word] = acc.get(word, Fraction(0)) + cu * cv * coeff
        return LieElement(self, {w: c for w, c in acc.items() if c})

    def rewrite(self, expr: Expr) -> LieElement:
        """Normal form of a formal bracket expression in the Lyndon basis."""
        match expr:
            case Symbol(name=name):
                return self.generator(name)
            case Bracket(left=left, right=right):
                return self.bracket(self.rewrite(left), self.rewrite(right))
            case Combination(terms=terms):
                total = self.zero()
                for coeff, term in terms:
                    total = total + self.rewrite(term) * coeff
                return total
            case _:
                raise ExpressionError(f"malformed expression: {expr!r}")

    def sum(self, elements: Iterable[LieElement]) -> LieElement:
        total = self.zero()
        for element in elements:
            total = total + element
        return total

    def _check_owner(self, element: LieElement) -> None:
        if element.algebra != self:
            raise MismatchError(f"element of {element.algebra!r} used in {self!r}")


class LieElement:
    """An immutable exact linear combination of Lyndon basis words."""

    __slots__ = ("_algebra", "_coeffs")

    def __init__(self, algebra: FreeLieAlgebra, coeffs: Mapping[Word, Fraction]) -> None:
        self._algebra = algebra
        self._coeffs = dict(coeffs)

    @property
    def algebra(self) -> FreeLieAlgebra:
        return self._algebra

    @property
    def class_cap(self) -> int:
        return self._algebra.class_cap

    @property
    def coeffs(self) -> Mapping[Word, Fraction]:
        return self._coeffs

    def terms(self) -> list[tuple[Word, Fraction]]:
        """Nonzero terms ordered by length, then lexicographically."""
        return sorted(self._coeffs.items(), key=lambda item: (len(item[0]), item[0]))

    def degrees(self) -> list[int]:
        return sorted({len(w) for w in self._coeffs})

    def component(self, degree: int) -> LieElement:
        """The homogeneous part of bracket length ``degree``."""
        return LieElement(self._algebra, {w: c for w, c in self._coeffs.items() if len(w) == degree})

    def components(self) -> dict[int, LieElement]:
        return {d: self.component(d) for d in self.degrees()}

    def weight_components(self, weights: Sequence[int] | None = None) -> dict[int, LieElement]:
        """Split by total generator weight (the algebra's weights unless ``weights`` is given)."""
        weights = self._algebra.weights if weights is None else weights
        parts: dict[int, dict[Word, Fraction]] = {}
        for word, coeff in self._coeffs.items():
            parts.setdefault(sum(weights[letter] for letter in word), {})[word] = coeff
        return {w: LieElement(self._algebra, part) for w, part in sorted(parts.items())}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def vector(self, degree: int) -> SparseVector:
        """Coordinates of the degree-``degree`` part in the basis of that degree."""
        return {self._algebra.position(w): c for w, c in self._coeffs.items() if len(w) == degree}

    def truncate(self, class_cap: int) -> LieElement:
        return LieElement(self._algebra, {w: c for w, c in self._coeffs.items() if len(w) <= class_cap})

    def bracket(self, other: LieElement) -> LieElement:
        return self._algebra.bracket(self, other)

    def render(self) -> str:
        """Human-readable normal form, e.g. ``x + y + 1/2*[x,y]``."""
        if not self._coeffs:
            return "0"
        pieces: list[str] = []
        for index, (word, coeff) in enumerate(self.terms()):
            body = self._algebra.render_word(word)
            magnitude = abs(coeff)
            text = body if magnitude == 1 else f"{format_rational(magnitude)}*{body}"
            if index == 0:
                pieces.append(f"-{text}" if coeff < 0 else text)
            else:
                pieces.append(f"- {text}" if coeff < 0 else f"+ {text}")
        return " ".join(pieces)

    def __iter__(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self.terms())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def _combine(self, other: LieElement, sign: int) -> LieElement:
        if other._algebra != self._algebra:
            raise MismatchError(f"cannot combine elements of {self._algebra!r} and {other._algebra!r}")
        out = dict(self._coeffs)
        for word, coeff in other._coeffs.items():
            value = out.get(word, Fraction(0)) + sign * coeff
            if value:
                out[word] = value
            else:
                out.pop(word, None)
        return LieElement(self._algebra, out)

    def __add__(self, other: LieElement) -> LieElement:
        return self._combine(other, 1)

    def __sub__(self, other: LieElement) -> LieElement:
        return self._combine(other, -1)

    def __neg__(self) -> LieElement:
        return LieElement(self._algebra, {w: -c for w, c in self._coeffs.items()})

    def __mul__(self, scalar: Fraction | int) -> LieElement:
        scalar = Fraction(scalar)
        if not scalar:
            return LieElement(self._algebra, {})
        return LieElement(self._algebra, {w: c * scalar for w, c in self._coeffs.items()})

    def __rmul__(self, scalar: Fraction | int) -> LieElement:
        return self * scalar

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self._algebra == other._algebra and self._coeffs == other._coeffs

    @override
    def __hash__(self) -> int:
        return hash((self._algebra, frozenset(self._coeffs.items())))

    @override
    def __repr__(self) -> str:
        return f"LieElement({self.render()})"


def lyndon_basis(generators: Sequence[Generator], degree: int) -> list[BracketWord]:
    """Basis brackets of exactly ``degree`` letters over ``generators``, in lexicographic order."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    return FreeLieAlgebra(generators, max(degree, 1)).lyndon_basis(degree)


def rewrite(expr: Expr, generators: Sequence[Generator], class_cap: int) -> LieElement:
    """Normal form of ``expr`` in the free Lie algebra on ``generators`` truncated at ``class_cap``."""
    return FreeLieAlgebra(generators, class_cap).rewrite(expr)
