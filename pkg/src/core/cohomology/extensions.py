"""Central extensions and the obstruction to lifting homomorphisms into them.

A central extension ``0 -> V -> E -> h -> 0`` by a trivial module ``V`` of
dimension ``m`` is given by a 2-cocycle ``ω = (ω_1, ..., ω_m)`` on ``h``,
with bracket ``[(a, v), (b, w)] = ([a, b], ω(a, b))`` on ``E = h ⊕ V``. A
homomorphism ``φ: g -> h`` lifts to ``E`` iff ``φ*ω`` is exact: if
``φ*ω = dλ`` then ``x ↦ (φx, -λ(x))`` is a lift.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from lie.exceptions import ConsistencyError, MismatchError, NotClosedError, NotHomomorphismError
from lie.linalg import SparseVector

from ..nilpotent import GradedQuotient, QuotientElement
from .classes import CohomologyClass
from .complex import Cochain, cochain_complex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LieHomomorphism:
    """A linear map between quotients given by the images of the source basis."""

    source: GradedQuotient
    target: GradedQuotient
    columns: tuple[SparseVector, ...]

    @classmethod
    def from_generator_images(cls, source: GradedQuotient, target: GradedQuotient, images: Sequence[QuotientElement]) -> LieHomomorphism:
        """Extends generator images bracket-multiplicatively.

        Raises:
            NotHomomorphismError: If a relation of the source is not sent to zero.
        """
        if len(images) != source.algebra.rank:
            raise MismatchError(f"{len(images)} images for {source.algebra.rank} generators")
        if any(image.quotient != target for image in images):
            raise MismatchError("generator image outside the target quotient")
        vectors = [dict(image.coords) for image in images]
        for index, relation in enumerate(source.presentation.relations):
            if target.evaluate(relation, vectors):
                raise NotHomomorphismError(f"relation {index + 1} ({relation.render()}) is not sent to zero")
        columns = tuple(target.evaluate(source.lift({i: Fraction(1)}), vectors) for i in range(source.dimension))
        return cls(source, target, columns)

    def apply(self, vector: SparseVector) -> SparseVector:
        out: SparseVector = {}
        for i, c in vector.items():
            for k, v in self.columns[i].items():
                value = out.get(k, Fraction(0)) + c * v
                if value:
                    out[k] = value
                else:
                    out.pop(k, None)
        return out

    def verify(self) -> None:
        """Checks ``φ([e_i, e_j]) == [φe_i, φe_j]`` on all basis pairs.

        Raises:
            NotHomomorphismError: With the first failing pair.
        """
        if len(self.columns) != self.source.dimension:
            raise MismatchError(f"{len(self.columns)} columns for a source of dimension {self.source.dimension}")
        for i, j in itertools.combinations(range(self.source.dimension), 2):
            lhs = self.apply(self.source.structure_constant(i, j))
            rhs = self.target.bracket_vectors(self.columns[i], self.columns[j])
            if lhs != rhs:
                raise NotHomomorphismError(f"bracket of basis elements {i + 1} and {j + 1} is not preserved", (i, j))


def evaluate_form(omega: Cochain, a: SparseVector, b: SparseVector) -> Fraction:
    """``ω(a, b)`` for a 2-cochain ``ω``."""
    total = Fraction(0)
    for (i, j), c in omega.items():
        total += c * (a.get(i, Fraction(0)) * b.get(j, Fraction(0)) - a.get(j, Fraction(0)) * b.get(i, Fraction(0)))
    return total


def pullback(phi: LieHomomorphism, omega: Cochain) -> Cochain:
    """``(φ*ω)(e_i, e_j) = ω(φe_i, φe_j)``."""
    out: Cochain = {}
    for i, j in itertools.combinations(range(phi.source.dimension), 2):
        value = evaluate_form(omega, phi.columns[i], phi.columns[j])
        if value:
            out[(i, j)] = value
    return out


def _single_grade(parts: dict[int, Cochain]) -> int | None:
    return next(iter(parts)) if len(parts) == 1 else None


@dataclass
class ExtensionObstruction:
    """The pulled-back classes, one per coordinate of ``V``, and a lift when they all vanish.

    Attributes:
        classes: The classes of ``φ*ω_k`` in ``H^2(g)``.
        vanishes: True iff every class is zero.
        lift: The correcting 1-cochains ``μ_k`` with ``x ↦ (φx, μ(x))`` a homomorphism.
    """

    classes: list[CohomologyClass]
    vanishes: bool
    lift: list[Cochain] | None = None


def extension_lift_obstruction(g: GradedQuotient, omega: Sequence[Cochain], phi: LieHomomorphism) -> ExtensionObstruction:
    """Obstruction to lifting ``φ: g -> h`` into the central extension of ``h`` by ``ω``.

    Args:
        g: The source quotient.
        omega: The cocycle components on ``h = phi.target``.
        phi: A homomorphism ``g -> h``.

    Returns:
        The obstruction classes; when they vanish, a verified lift.

    Raises:
        NotClosedError: If some ``ω_k`` is not a cocycle.
        NotHomomorphismError: If ``φ`` does not preserve brackets.
    """
    if phi.source != g:
        raise MismatchError("homomorphism source is not the given quotient")
    h = phi.target
    target_complex = cochain_complex(h)
    for index, component in enumerate(omega):
        if not target_complex.is_closed(component):
            raise NotClosedError(f"cocycle component {index + 1} ({target_complex.render(component)}) is not closed")
    phi.verify()

    source_complex = cochain_complex(g)
    pulled = [pullback(phi, component) for component in omega]
    classes = [CohomologyClass(source_complex, 2, p, _single_grade(source_complex.grade_components(p))) for p in pulled]
    primitives = [source_complex.solve_coboundary(p) for p in pulled]
    if any(p is None for p in primitives):
        logger.info("extension obstruction is nonzero")
        return ExtensionObstruction(classes, False)

    lift = [{m: -c for m, c in (p or {}).items()} for p in primitives]
    for i, j in itertools.combinations(range(g.dimension), 2):
        bracket = g.structure_constant(i, j)
        for component, mu in zip(omega, lift, strict=True):
            lhs = sum((c * mu.get((k,), Fraction(0)) for k, c in bracket.items()), Fraction(0))
            rhs = evaluate_form(component, phi.columns[i], phi.columns[j])
            if lhs != rhs:
                raise ConsistencyError(f"lift fails on basis pair ({i + 1}, {j + 1})")
    return ExtensionObstruction(classes, True, lift)
