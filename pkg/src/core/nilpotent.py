"""Finitely presented nilpotent Lie algebras.

A presentation ``L(V)/(J)`` at class cap ``c`` is turned into its graded
quotient ``L(V)/(J + Γ_{c+1})`` by degree-by-degree exact elimination: the
degree-n part of the ideal is the span of the degree-n relation components
and of ``[g, J_{n-1}]`` for all generators ``g``. The quotient basis in each
degree is the set of Lyndon words that are not echelon pivots of ``J_n``.
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import override

from lie.exceptions import CapExceededError, MismatchError, PresentationError
from lie.free_lie import Expr, FreeLieAlgebra, Generator, LieElement, format_rational
from lie.linalg import EchelonBasis, SparseVector, axpy
from lie.words import Word, standard_factorization

from .config import get_config

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitRecord:
    """An inhomogeneous input relation that was replaced by its length components."""

    index: int
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class MinimalRelation:
    """A relation component that is not generated by lower-degree ideal elements."""

    degree: int
    element: LieElement
    source: int

    def render(self) -> str:
        return self.element.render()


@dataclass(frozen=True)
class LiePresentation:
    """Generators with weights, a class cap and normal-formed relations."""

    generators: tuple[Generator, ...]
    class_cap: int
    relations: tuple[LieElement, ...] = ()

    def __post_init__(self) -> None:
        algebra = FreeLieAlgebra(self.generators, self.class_cap)
        for index, relation in enumerate(self.relations):
            if relation.algebra != algebra:
                raise MismatchError(f"relation {index + 1} lives in {relation.algebra!r}, expected {algebra!r}")
            if not relation:
                raise PresentationError(f"relation {index + 1} is zero after normal-forming")
            if 1 in relation.degrees():
                raise PresentationError(f"relation {index + 1} has a degree-1 component: {relation.render()}")

    @classmethod
    def from_expressions(cls, generators: Sequence[Generator], class_cap: int, expressions: Sequence[Expr]) -> LiePresentation:
        """Normal-forms formal relation expressions into a presentation."""
        algebra = FreeLieAlgebra(generators, class_cap)
        return cls(tuple(generators), class_cap, tuple(algebra.rewrite(e) for e in expressions))

    @functools.cached_property
    def algebra(self) -> FreeLieAlgebra:
        return FreeLieAlgebra(self.generators, self.class_cap)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def with_class_cap(self, class_cap: int) -> LiePresentation:
        """The same generators and relations at another cap; relation components above it are dropped."""
        algebra = FreeLieAlgebra(self.generators, class_cap)
        relations = tuple(r for r in (algebra.element(rel.coeffs) for rel in self.relations) if r)
        return LiePresentation(self.generators, class_cap, relations)

    def split_relations(self) -> list[SplitRecord]:
        """Inhomogeneous relations and the length components they are split into."""
        return [SplitRecord(i, tuple(r.degrees())) for i, r in enumerate(self.relations) if not r.is_homogeneous()]

    def relation_components(self) -> Iterator[tuple[int, LieElement]]:
        """Yields ``(source index, homogeneous component)`` pairs."""
        for index, relation in enumerate(self.relations):
            for component in relation.components().values():
                yield index, component


@dataclass
class _Elimination:
    ideal: dict[int, EchelonBasis] = field(default_factory=dict)
    minimal: list[MinimalRelation] = field(default_factory=list)


@functools.lru_cache(maxsize=64)
def _eliminate(pres: LiePresentation) -> _Elimination:
    algebra = pres.algebra
    generators = [algebra.generator(name) for name in pres.names]
    components: dict[int, list[tuple[int, LieElement]]] = {}
    for source, component in pres.relation_components():
        components.setdefault(component.degrees()[0], []).append((source, component))

    result = _Elimination()
    previous: list[LieElement] = []
    for degree in range(1, pres.class_cap + 1):
        basis = EchelonBasis()
        for generator in generators:
            for row in previous:
                basis.add(generator.bracket(row).vector(degree))
        generated = basis.rank
        for source, component in components.get(degree, []):
            if basis.add(component.vector(degree)) is None:
                result.minimal.append(MinimalRelation(degree, component, source))
        result.ideal[degree] = basis
        previous = [algebra.from_vector(degree, row) for row in basis.rows()]
        logger.debug(
            "degree %d: free %d, ideal %d (%d generated, %d new)",
            degree,
            algebra.dimension(degree),
            basis.rank,
            generated,
            basis.rank - generated,
        )
    return result


def minimal_relations(pres: LiePresentation) -> list[MinimalRelation]:
    """A minimal homogeneous generating set of the relation ideal, in degree order."""
    return list(_eliminate(pres).minimal)


def minimal_relation_degrees(pres: LiePresentation) -> list[int]:
    """Degrees, with multiplicity and sorted, of a minimal homogeneous generating set of the ideal."""
    return sorted(r.degree for r in _eliminate(pres).minimal)


class GradedQuotient:
    """Basis and structure constants of ``L(V)/(J + Γ_{c+1})``.

    Basis elements are numbered globally, degree by degree; within a degree
    they follow the order of their Lyndon words. Vectors over the quotient are
    sparse maps from global index to coefficient.
    """

    def __init__(self, presentation: LiePresentation, ideal: Mapping[int, EchelonBasis]) -> None:
        self._presentation = presentation
        self._ideal = dict(ideal)
        algebra = presentation.algebra
        self._words: list[Word] = []
        self._index: dict[Word, int] = {}
        for degree in range(1, presentation.class_cap + 1):
            pivots = set(self._ideal[degree].pivots)
            for position, word in enumerate(algebra.basis_words(degree)):
                if position not in pivots:
                    self._index[word] = len(self._words)
                    self._words.append(word)
        self._structure = self._structure_constants()

    def _structure_constants(self) -> dict[tuple[int, int], SparseVector]:
        algebra = self._presentation.algebra
        lifts = [algebra.element({w: 1}) for w in self._words]
        table: dict[tuple[int, int], SparseVector] = {}
        for i, wi in enumerate(self._words):
            for j in range(i + 1, len(self._words)):
                if len(wi) + len(self._words[j]) > self.class_cap:
                    continue
                image = self.project(lifts[i].bracket(lifts[j]))
                if image:
                    table[(i, j)] = image
        return table

    # --- Shape ---
    @property
    def presentation(self) -> LiePresentation:
        return self._presentation

    @property
    def algebra(self) -> FreeLieAlgebra:
        return self._presentation.algebra

    @property
    def class_cap(self) -> int:
        return self._presentation.class_cap

    @property
    def dimension(self) -> int:
        return len(self._words)

    @property
    def dims(self) -> tuple[int, ...]:
        """Dimension of each degree component, degrees ``1..class_cap``."""
        counts = [0] * self.class_cap
        for word in self._words:
            counts[len(word) - 1] += 1
        return tuple(counts)

    @property
    def nilpotency_class(self) -> int:
        """Largest degree with a nonzero component (0 for the trivial algebra)."""
        return max((len(w) for w in self._words), default=0)

    @property
    def words(self) -> tuple[Word, ...]:
        return tuple(self._words)

    def degree(self, index: int) -> int:
        return len(self._words[index])

    def weight(self, index: int) -> int:
        return self.algebra.word_weight(self._words[index])

    def indices(self, degree: int) -> list[int]:
        """Global indices of the basis elements of one degree."""
        return [i for i, w in enumerate(self._words) if len(w) == degree]

    def label(self, index: int) -> str:
        return self.algebra.render_word(self._words[index])

    def labels(self) -> list[str]:
        return [self.label(i) for i in range(self.dimension)]

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedQuotient):
            return NotImplemented
        return self._presentation == other._presentation

    @override
    def __hash__(self) -> int:
        return hash(self._presentation)

    @override
    def __repr__(self) -> str:
        return f"GradedQuotient(dims={self.dims})"

    # --- Structure ---
    def structure_constant(self, i: int, j: int) -> SparseVector:
        """Coordinates of ``[e_i, e_j]``."""
        if i == j:
            return {}
        if i < j:
            return dict(self._structure.get((i, j), {}))
        return {k: -c for k, c in self._structure.get((j, i), {}).items()}

    def structure_constants(self) -> dict[tuple[int, int], SparseVector]:
        """Nonzero ``[e_i, e_j]`` for ``i < j``."""
        return {pair: dict(v) for pair, v in self._structure.items()}

    def bracket_vectors(self, a: Mapping[int, Fraction], b: Mapping[int, Fraction]) -> SparseVector:
        out: SparseVector = {}
        for i, ci in a.items():
            for j, cj in b.items():
                if i != j:
                    axpy(out, ci * cj, self.structure_constant(i, j))
        return out

    def project(self, element: LieElement) -> SparseVector:
        """Quotient coordinates of a free-algebra element over the same generators."""
        if element.algebra.generators != self.algebra.generators:
            raise MismatchError(f"element of {element.algebra!r} projected into a quotient of {self.algebra!r}")
        algebra = self.algebra
        out: SparseVector = {}
        for degree in element.degrees():
            if degree > self.class_cap:
                continue
            residual = self._ideal[degree].reduce(element.component(degree).vector(degree))
            words = algebra.basis_words(degree)
            for position, coeff in residual.items():
                out[self._index[words[position]]] = coeff
        return out

    def lift(self, vector: Mapping[int, Fraction]) -> LieElement:
        """The free-algebra element with the same Lyndon coordinates."""
        return self.algebra.element({self._words[i]: c for i, c in vector.items()})

    def evaluate(self, element: LieElement, images: Sequence[Mapping[int, Fraction]]) -> SparseVector:
        """Image of ``element`` under the Lie homomorphism sending generator ``k`` to ``images[k]``.

        ``element`` may live in any free Lie algebra with ``len(images)``
        generators; brackets are taken in this quotient.
        """
        if element.algebra.rank != len(images):
            raise MismatchError(f"{len(images)} images given for {element.algebra.rank} generators")
        cache: dict[Word, SparseVector] = {}

        def image(word: Word) -> SparseVector:
            if word not in cache:
                if len(word) == 1:
                    cache[word] = dict(images[word[0]])
                else:
                    left, right = standard_factorization(word)
                    cache[word] = self.bracket_vectors(image(left), image(right))
            return cache[word]

        out: SparseVector = {}
        for word, coeff in element.coeffs.items():
            axpy(out, coeff, image(word))
        return out

    def element(self, vector: Mapping[int, Fraction | int]) -> QuotientElement:
        return QuotientElement(self, {i: Fraction(c) for i, c in vector.items() if c})

    def basis_element(self, index: int) -> QuotientElement:
        return QuotientElement(self, {index: Fraction(1)})

    def from_free(self, element: LieElement) -> QuotientElement:
        return QuotientElement(self, self.project(element))

    def from_expression(self, expr: Expr) -> QuotientElement:
        return self.from_free(self.algebra.rewrite(expr))

    def zero(self) -> QuotientElement:
        return QuotientElement(self, {})

    def truncate(self, class_cap: int) -> GradedQuotient:
        """The quotient at another class cap (by ``Γ_{class_cap+1}`` when smaller)."""
        return nilpotent_quotient(self._presentation.with_class_cap(class_cap))


@dataclass(frozen=True)
class QuotientElement:
    """An element of a :class:`GradedQuotient` in basis coordinates."""

    quotient: GradedQuotient
    coords: Mapping[int, Fraction]

    def _check(self, other: QuotientElement) -> None:
        if other.quotient != self.quotient:
            raise MismatchError("elements of different quotients")

    def __add__(self, other: QuotientElement) -> QuotientElement:
        self._check(other)
        out = dict(self.coords)
        axpy(out, 1, other.coords)
        return QuotientElement(self.quotient, out)

    def __sub__(self, other: QuotientElement) -> QuotientElement:
        self._check(other)
        out = dict(self.coords)
        axpy(out, -1, other.coords)
        return QuotientElement(self.quotient, out)

    def __neg__(self) -> QuotientElement:
        return QuotientElement(self.quotient, {i: -c for i, c in self.coords.items()})

    def __mul__(self, scalar: Fraction | int) -> QuotientElement:
        return QuotientElement(self.quotient, {i: c * scalar for i, c in self.coords.items() if scalar})

    __rmul__ = __mul__

    def bracket(self, other: QuotientElement) -> QuotientElement:
        self._check(other)
        return QuotientElement(self.quotient, self.quotient.bracket_vectors(self.coords, other.coords))

    def __bool__(self) -> bool:
        return bool(self.coords)

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuotientElement):
            return NotImplemented
        return self.quotient == other.quotient and dict(self.coords) == dict(other.coords)

    @override
    def __hash__(self) -> int:
        return hash((self.quotient, frozenset(self.coords.items())))

    def render(self) -> str:
        return self.quotient.lift(self.coords).render()

    def coordinates(self) -> list[str]:
        """Dense coordinates as printed rationals."""
        return [format_rational(self.coords.get(i, Fraction(0))) for i in range(self.quotient.dimension)]

    @override
    def __repr__(self) -> str:
        return f"QuotientElement({self.render()})"


def check_class_cap(class_cap: int, max_class: int | None = None) -> None:
    """Raises CapExceededError when ``class_cap`` is above the configured hard limit."""
    limit = get_config()["limits"]["max_class"] if max_class is None else max_class
    if class_cap > limit:
        raise CapExceededError("max_class", class_cap, limit)


@functools.lru_cache(maxsize=64)
def _quotient(pres: LiePresentation) -> GradedQuotient:
    return GradedQuotient(pres, _eliminate(pres).ideal)


def nilpotent_quotient(pres: LiePresentation, *, max_class: int | None = None) -> GradedQuotient:
    """Computes ``L(V)/(J + Γ_{c+1})`` for a presentation.

    Args:
        pres: The presentation; inhomogeneous relations are split into components.
        max_class: Hard limit on the class cap; defaults to ``limits.max_class``.

    Returns:
        The graded quotient with its structure constants.

    Raises:
        CapExceededError: If the class cap is above the limit.
    """
    check_class_cap(pres.class_cap, max_class)
    split = pres.split_relations()
    if split:
        logger.info("split %d inhomogeneous relation(s) into length components", len(split))
    quotient = _quotient(pres)
    logger.info("quotient dims %s, total %d", quotient.dims, quotient.dimension)
    return quotient


def lcs_dims(q: GradedQuotient) -> list[int]:
    """``dim Γ_n/Γ_{n+1}`` for ``n = 1, 2, ...`` until ``Γ_n`` vanishes.

    Computed from the structure constants alone: ``Γ_{n+1}`` is spanned by
    brackets of basis elements with a spanning set of ``Γ_n``.
    """
    current = EchelonBasis()
    current.extend({i: Fraction(1)} for i in range(q.dimension))
    dims: list[int] = []
    while current.rank:
        following = EchelonBasis()
        for row in current.rows():
            for i in range(q.dimension):
                following.add(q.bracket_vectors({i: Fraction(1)}, row))
        dims.append(current.rank - following.rank)
        current = following
    return dims
