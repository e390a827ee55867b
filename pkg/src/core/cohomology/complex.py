"""The Chevalley-Eilenberg cochain complex of a graded quotient.

Cochains are sparse maps from wedge monomials (increasing tuples of dual
basis indices) to coefficients. The differential is the derivation with
``(dξ^k)(e_i, e_j) = -ξ^k([e_i, e_j])``, i.e.
``dξ^k = -sum_{i<j} c_ij^k ξ^i ∧ ξ^j``. Every monomial has a grade, the sum
of the degrees of its basis elements; d preserves grades, so the complex is
handled one ``(p, grade)`` component at a time and only the components a
computation touches are ever built.
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from lie.exceptions import CapExceededError
from lie.free_lie import format_rational
from lie.linalg import EchelonBasis, SparseVector

from ..config import get_config
from ..nilpotent import GradedQuotient

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]
Cochain = dict[Monomial, Fraction]


def wedge(a: Mapping[Monomial, Fraction], b: Mapping[Monomial, Fraction]) -> Cochain:
    """Exterior product; the sign is the parity of the merge permutation."""
    out: Cochain = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if set(ma) & set(mb):
                continue
            inversions = sum(1 for x in ma for y in mb if x > y)
            merged = tuple(sorted(ma + mb))
            value = out.get(merged, Fraction(0)) + (-1 if inversions % 2 else 1) * ca * cb
            if value:
                out[merged] = value
            else:
                out.pop(merged, None)
    return out


def add_cochains(a: Mapping[Monomial, Fraction], b: Mapping[Monomial, Fraction], factor: Fraction | int = 1) -> Cochain:
    out = dict(a)
    for monomial, coeff in b.items():
        value = out.get(monomial, Fraction(0)) + factor * coeff
        if value:
            out[monomial] = value
        else:
            out.pop(monomial, None)
    return out


@dataclass(frozen=True)
class _Component:
    basis: tuple[Monomial, ...]
    positions: Mapping[Monomial, int]


class CochainComplex:
    """Λ(u∨) with the Chevalley-Eilenberg differential, built lazily by component."""

    def __init__(self, quotient: GradedQuotient, component_limit: int | None = None) -> None:
        self._quotient = quotient
        self._degrees = [quotient.degree(i) for i in range(quotient.dimension)]
        self._limit = get_config()["limits"]["cohomology_component_limit"] if component_limit is None else component_limit
        self._d1: list[Cochain] = [{} for _ in range(quotient.dimension)]
        for (i, j), image in quotient.structure_constants().items():
            for k, c in image.items():
                self._d1[k][(i, j)] = -c
        self._components: dict[tuple[int, int], _Component] = {}
        self._images: dict[tuple[int, int, bool], EchelonBasis] = {}
        self._classes: dict[tuple[int, int], tuple[list[Cochain], EchelonBasis, int]] = {}

    @property
    def quotient(self) -> GradedQuotient:
        return self._quotient

    @property
    def dimension(self) -> int:
        return len(self._degrees)

    # --- Cochains ---
    def dual(self, index: int) -> Cochain:
        """The dual basis cochain ξ^index."""
        return {(index,): Fraction(1)}

    def grade(self, monomial: Monomial) -> int:
        return sum(self._degrees[i] for i in monomial)

    def grade_components(self, cochain: Mapping[Monomial, Fraction]) -> dict[int, Cochain]:
        parts: dict[int, Cochain] = {}
        for monomial, coeff in cochain.items():
            parts.setdefault(self.grade(monomial), {})[monomial] = coeff
        return parts

    def d(self, cochain: Mapping[Monomial, Fraction]) -> Cochain:
        """The differential, extended to all degrees as a derivation."""
        out: Cochain = {}
        for monomial, coeff in cochain.items():
            for position, index in enumerate(monomial):
                if not self._d1[index]:
                    continue
                term = wedge(wedge({monomial[:position]: Fraction(1)}, self._d1[index]), {monomial[position + 1 :]: Fraction(1)})
                out = add_cochains(out, term, -coeff if position % 2 else coeff)
        return out

    def render(self, cochain: Mapping[Monomial, Fraction]) -> str:
        if not cochain:
            return "0"
        pieces: list[str] = []
        for index, (monomial, coeff) in enumerate(sorted(cochain.items(), key=lambda item: (len(item[0]), item[0]))):
            body = "∧".join(f"{self._quotient.label(i)}∨" for i in monomial) or "1"
            magnitude = abs(coeff)
            text = body if magnitude == 1 else f"{format_rational(magnitude)}*{body}"
            if index == 0:
                pieces.append(f"-{text}" if coeff < 0 else text)
            else:
                pieces.append(f"- {text}" if coeff < 0 else f"+ {text}")
        return " ".join(pieces)

    # --- Components ---
    def grades(self, p: int) -> list[int]:
        """Grades carried by degree-``p`` cochains."""
        if p < 0 or p > self.dimension:
            return []
        ordered = sorted(self._degrees)
        return list(range(sum(ordered[:p]), sum(ordered[len(ordered) - p :]) + 1))

    def _monomials(self, p: int, grade: int) -> Iterator[Monomial]:
        def extend(start: int, size: int, budget: int) -> Iterator[Monomial]:
            if size == 0:
                if budget == 0:
                    yield ()
                return
            for index in range(start, self.dimension):
                degree = self._degrees[index]
                if degree + (size - 1) > budget:
                    continue
                for rest in extend(index + 1, size - 1, budget - degree):
                    yield (index,) + rest

        yield from extend(0, p, grade)

    def component(self, p: int, grade: int) -> tuple[Monomial, ...]:
        """Monomials of degree ``p`` and the given grade, in lexicographic order."""
        return self._component(p, grade).basis

    def _component(self, p: int, grade: int) -> _Component:
        key = (p, grade)
        if key not in self._components:
            basis: list[Monomial] = []
            for monomial in self._monomials(p, grade):
                basis.append(monomial)
                if len(basis) > self._limit:
                    raise CapExceededError("cohomology_component_limit", len(basis), self._limit)
            self._components[key] = _Component(tuple(basis), {m: i for i, m in enumerate(basis)})
        return self._components[key]

    def vector(self, cochain: Mapping[Monomial, Fraction], p: int, grade: int) -> SparseVector:
        positions = self._component(p, grade).positions
        return {positions[m]: c for m, c in cochain.items() if m in positions}

    def cochain(self, vector: Mapping[int, Fraction], p: int, grade: int) -> Cochain:
        basis = self._component(p, grade).basis
        return {basis[i]: c for i, c in vector.items() if c}

    def _image(self, p: int, grade: int, reverse: bool = False) -> EchelonBasis:
        """Echelon form of ``d(Λ^{p-1})`` in the component; inputs are the source monomials."""
        key = (p, grade, reverse)
        if key not in self._images:
            echelon = EchelonBasis()
            if p >= 1:
                sources = self.component(p - 1, grade)
                if reverse:
                    sources = tuple(reversed(sources))
                for monomial in sources:
                    echelon.add(self.vector(self.d({monomial: Fraction(1)}), p, grade))
            self._images[key] = echelon
        return self._images[key]

    def cocycles(self, p: int, grade: int) -> list[Cochain]:
        """A deterministic basis of the degree-``p`` cocycles of one grade."""
        echelon = EchelonBasis()
        kernel = echelon.extend(self.vector(self.d({m: Fraction(1)}), p + 1, grade) for m in self.component(p, grade))
        return [self.cochain(v, p, grade) for v in kernel]

    def _cohomology(self, p: int, grade: int) -> tuple[list[Cochain], EchelonBasis, int]:
        key = (p, grade)
        if key not in self._classes:
            image = self._image(p, grade)
            echelon = EchelonBasis()
            echelon.extend(image.rows())
            offset = echelon.inputs
            representatives: list[Cochain] = []
            for cocycle in self.cocycles(p, grade):
                if echelon.add(self.vector(cocycle, p, grade)) is None:
                    representatives.append(cocycle)
            # Coordinate system over the inputs: coboundary rows, then representatives.
            coordinates = EchelonBasis()
            coordinates.extend(image.rows())
            coordinates.extend(self.vector(r, p, grade) for r in representatives)
            self._classes[key] = (representatives, coordinates, offset)
            logger.debug("H^%d grade %d: %d classes", p, grade, len(representatives))
        return self._classes[key]

    def representatives(self, p: int, grade: int) -> list[Cochain]:
        """Cocycles whose classes form a basis of the grade component of ``H^p``."""
        return list(self._cohomology(p, grade)[0])

    def betti(self, p: int, grade: int) -> int:
        return len(self._cohomology(p, grade)[0])

    def class_coordinates(self, cochain: Mapping[Monomial, Fraction], p: int, grade: int) -> list[Fraction]:
        """Coordinates of a homogeneous cocycle's class in the basis of :meth:`representatives`."""
        representatives, coordinates, offset = self._cohomology(p, grade)
        solution = coordinates.solve(self.vector(cochain, p, grade))
        if solution is None:
            raise ValueError("cochain is not a cocycle of this component")
        return [solution.get(offset + i, Fraction(0)) for i in range(len(representatives))]

    def is_closed(self, cochain: Mapping[Monomial, Fraction]) -> bool:
        return not self.d(cochain)

    def is_exact(self, cochain: Mapping[Monomial, Fraction]) -> bool:
        """True iff the cochain is a coboundary (checked grade by grade)."""
        for grade, part in self.grade_components(cochain).items():
            p = len(next(iter(part)))
            if not self._image(p, grade).contains(self.vector(part, p, grade)):
                return False
        return True

    def reduce(self, cochain: Mapping[Monomial, Fraction]) -> Cochain:
        """Normal form modulo coboundaries; equal classes have equal normal forms."""
        out: Cochain = {}
        for grade, part in self.grade_components(cochain).items():
            p = len(next(iter(part)))
            residual = self._image(p, grade).reduce(self.vector(part, p, grade))
            out.update(self.cochain(residual, p, grade))
        return out

    def solve_coboundary(self, cochain: Mapping[Monomial, Fraction], *, reverse: bool = False) -> Cochain | None:
        """A cochain ``s`` with ``d s == cochain``, or None when there is none.

        The solution is the least-index one read off the echelon form; with
        ``reverse`` the source monomials are eliminated in the opposite order.
        """
        solution: Cochain = {}
        for grade, part in self.grade_components(cochain).items():
            p = len(next(iter(part)))
            combination = self._image(p, grade, reverse).solve(self.vector(part, p, grade))
            if combination is None:
                return None
            sources = self.component(p - 1, grade)
            if reverse:
                sources = tuple(reversed(sources))
            for i, c in combination.items():
                solution = add_cochains(solution, {sources[i]: c})
        return solution


@functools.lru_cache(maxsize=32)
def _cached_complex(quotient: GradedQuotient, component_limit: int) -> CochainComplex:
    return CochainComplex(quotient, component_limit)


def cochain_complex(quotient: GradedQuotient) -> CochainComplex:
    """The complex of a quotient, cached per quotient and configured component limit."""
    return _cached_complex(quotient, get_config()["limits"]["cohomology_component_limit"])


def check_dimension(quotient: GradedQuotient, limit: int | None = None) -> None:
    """Raises CapExceededError when a full computation over ``Λ(u∨)`` is too large."""
    limit = get_config()["limits"]["cohomology_max_dimension"] if limit is None else limit
    if quotient.dimension > limit:
        raise CapExceededError("cohomology_max_dimension", quotient.dimension, limit)


def d_squared_vanishes(complex_: CochainComplex, degrees: Sequence[int] | None = None) -> bool:
    """Checks ``d∘d == 0`` on every basis monomial of the given degrees."""
    degrees = range(complex_.dimension + 1) if degrees is None else degrees
    for p in degrees:
        for grade in complex_.grades(p):
            for monomial in complex_.component(p, grade):
                if complex_.d(complex_.d({monomial: Fraction(1)})):
                    return False
    return True


__all__ = ["Cochain", "CochainComplex", "Monomial", "add_cochains", "check_dimension", "cochain_complex", "d_squared_vanishes", "wedge"]
