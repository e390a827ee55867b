"""Cohomology classes, Betti numbers and the cup product."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import override

from lie.exceptions import CupDataError, ExpressionError, MismatchError, NotClosedError
from lie.free_lie import LieElement
from lie.linalg import EchelonBasis, SparseVector, kernel

from ..nilpotent import GradedQuotient
from .complex import Cochain, CochainComplex, add_cochains, check_dimension, cochain_complex, wedge

logger = logging.getLogger(__name__)

CupTensorValues = list[list[list[Fraction]]]


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    """A cocycle taken modulo coboundaries.

    Attributes:
        complex: The complex the representative lives in.
        degree: Cochain degree ``p``.
        representative: The cocycle.
        grade: The grade when the representative is homogeneous, else None.
    """

    complex: CochainComplex
    degree: int
    representative: Cochain
    grade: int | None = None

    def _check(self, other: CohomologyClass) -> None:
        if other.complex is not self.complex or other.degree != self.degree:
            raise MismatchError("classes of different complexes or degrees")

    def __add__(self, other: CohomologyClass) -> CohomologyClass:
        self._check(other)
        grade = self.grade if self.grade == other.grade else None
        return CohomologyClass(self.complex, self.degree, add_cochains(self.representative, other.representative), grade)

    def __neg__(self) -> CohomologyClass:
        return self * -1

    def __sub__(self, other: CohomologyClass) -> CohomologyClass:
        return self + (-other)

    def __mul__(self, scalar: Fraction | int) -> CohomologyClass:
        scaled = {m: c * scalar for m, c in self.representative.items()} if scalar else {}
        return CohomologyClass(self.complex, self.degree, scaled, self.grade)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.complex.is_exact(self.representative)

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        if other.complex is not self.complex or other.degree != self.degree:
            return False
        return self.complex.is_exact(add_cochains(self.representative, other.representative, -1))

    @override
    def __hash__(self) -> int:
        return hash((id(self.complex), self.degree, frozenset(self.complex.reduce(self.representative).items())))

    def render(self) -> str:
        return self.complex.render(self.representative)

    @override
    def __repr__(self) -> str:
        return f"CohomologyClass(H^{self.degree}: {self.render()})"


@dataclass
class CohomologyGroup:
    """A Betti number with a basis of representative classes."""

    degree: int
    dimension: int
    basis: list[CohomologyClass] = field(default_factory=list)
    grade: int | None = None

    def __int__(self) -> int:
        return self.dimension


def make_class(u: GradedQuotient, cochain: Cochain) -> CohomologyClass:
    """Wraps a cocycle of ``u``'s complex as a class.

    Raises:
        NotClosedError: If the cochain is not closed.
    """
    complex_ = cochain_complex(u)
    if not complex_.is_closed(cochain):
        raise NotClosedError(f"{complex_.render(cochain)} is not a cocycle")
    degrees = {len(m) for m in cochain}
    if len(degrees) > 1:
        raise MismatchError("cochain mixes degrees")
    grades = set(complex_.grade_components(cochain))
    grade = grades.pop() if len(grades) == 1 else None
    degree = degrees.pop() if degrees else 1
    return CohomologyClass(complex_, degree, dict(cochain), grade)


def dual_class(u: GradedQuotient, index: int) -> CohomologyClass:
    """The class of the dual of basis element ``index`` (a degree-1 element for graded quotients)."""
    return make_class(u, {(index,): Fraction(1)})


def degree_one_class(u: GradedQuotient, element: LieElement) -> CohomologyClass:
    """The class ``sum c_i x_i∨`` named by a linear combination ``sum c_i x_i`` of generators."""
    if any(d != 1 for d in element.degrees()):
        raise ExpressionError(f"expected a linear combination of generators, got {element.render()}")
    return make_class(u, {(i,): c for i, c in u.project(element).items()})


def betti(u: GradedQuotient, p: int, grade: int | None = None) -> CohomologyGroup:
    """``dim H^p(u)`` with representative cocycles, in total or for one grade.

    Raises:
        CapExceededError: For total Betti numbers of quotients above
            ``limits.cohomology_max_dimension``.
    """
    complex_ = cochain_complex(u)
    if grade is None:
        check_dimension(u)
        grades = complex_.grades(p)
    else:
        grades = [grade] if grade in complex_.grades(p) else []
    basis = [CohomologyClass(complex_, p, r, g) for g in grades for r in complex_.representatives(p, g)]
    logger.info("b_%d%s = %d", p, "" if grade is None else f" (grade {grade})", len(basis))
    return CohomologyGroup(p, len(basis), basis, grade)


def h1_basis(u: GradedQuotient) -> list[CohomologyClass]:
    """A basis of ``H^1``; for graded quotients these are the duals of the degree-1 basis elements."""
    complex_ = cochain_complex(u)
    return [CohomologyClass(complex_, 1, r, g) for g in complex_.grades(1) for r in complex_.representatives(1, g)]


def cup(u: GradedQuotient, a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    """The cup product, represented by the wedge of representatives."""
    complex_ = cochain_complex(u)
    if a.complex is not complex_ or b.complex is not complex_:
        raise MismatchError("cup of classes from another complex")
    if a.degree != 1 or b.degree != 1:
        raise MismatchError(f"cup expects degree-1 classes, got degrees {a.degree} and {b.degree}")
    grade = a.grade + b.grade if a.grade is not None and b.grade is not None else None
    return CohomologyClass(complex_, 2, wedge(a.representative, b.representative), grade)


@dataclass
class CupTensor:
    """Coordinates of ``h_i ∪ h_j`` in a basis of the grade-2 part of ``H^2``."""

    h1: list[str]
    h2: list[str]
    values: CupTensorValues


def cup_tensor(u: GradedQuotient) -> CupTensor:
    """The cup tensor ``H^1 x H^1 -> H^2`` in the bases of :func:`h1_basis` and ``betti(u, 2, grade=2)``."""
    complex_ = cochain_complex(u)
    h1 = h1_basis(u)
    h2 = complex_.representatives(2, 2) if 2 in complex_.grades(2) else []
    values: CupTensorValues = []
    for a in h1:
        row: list[list[Fraction]] = []
        for b in h1:
            product = wedge(a.representative, b.representative)
            row.append(complex_.class_coordinates(product, 2, 2) if h2 else [])
        values.append(row)
    return CupTensor([a.render() for a in h1], [complex_.render(r) for r in h2], values)


def bracket_matrix(u: GradedQuotient) -> list[list[Fraction]]:
    """The bracket map ``Λ²(u_1) -> u_2``: one row per degree-2 basis element, one column per pair ``i < j``."""
    ones = u.indices(1)
    twos = u.indices(2) if u.class_cap >= 2 else []
    pairs = list(itertools.combinations(ones, 2))
    return [[u.structure_constant(i, j).get(k, Fraction(0)) for i, j in pairs] for k in twos]


def cup_dual_to_bracket(u: GradedQuotient) -> bool:
    """Checks that cup on ``Λ²H^1`` is dual to the bracket into ``Γ_2/Γ_3``.

    The kernel of ``ξ^i∧ξ^j ↦ [ξ^i ∪ ξ^j]`` must equal the row space of
    :func:`bracket_matrix`, and the two ranks must add up to ``C(dim H^1, 2)``.
    """
    complex_ = cochain_complex(u)
    ones = u.indices(1)
    pairs = list(itertools.combinations(ones, 2))
    if not pairs:
        return True
    h2_present = 2 in complex_.grades(2) and complex_.betti(2, 2) > 0
    images: list[SparseVector] = []
    for i, j in pairs:
        coords = complex_.class_coordinates({(i, j): Fraction(1)}, 2, 2) if h2_present else []
        images.append({k: c for k, c in enumerate(coords) if c})
    cup_kernel = kernel(images)

    rows: list[SparseVector] = [{p: c for p, c in enumerate(row) if c} for row in bracket_matrix(u)]
    kernel_span = EchelonBasis()
    kernel_span.extend(cup_kernel)
    row_span = EchelonBasis()
    row_span.extend(rows)
    cup_rank = len(pairs) - len(cup_kernel)
    return kernel_span.rank == row_span.rank and all(kernel_span.contains(r) for r in rows) and cup_rank + row_span.rank == len(pairs)


def _validate_tensor(values: Sequence[Sequence[Sequence[Fraction | int]]]) -> tuple[int, int]:
    n = len(values)
    widths = {len(row) for row in values}
    if n and widths != {n}:
        raise CupDataError(f"cup tensor must be {n} x {n}")
    depths = {len(cell) for row in values for cell in row}
    if len(depths) > 1:
        raise CupDataError("cup tensor entries have different lengths")
    m = depths.pop() if depths else 0
    for i in range(n):
        for j in range(n):
            for k in range(m):
                if Fraction(values[i][j][k]) != -Fraction(values[j][i][k]):
                    raise CupDataError(f"cup tensor is not antisymmetric at ({i + 1}, {j + 1}, {k + 1})")
    return n, m


def pairing_kernel(values: Sequence[Sequence[Sequence[Fraction | int]]]) -> list[SparseVector]:
    """Basis of ``{v in H^1 : v ∪ w = 0 for all w}``."""
    n, m = _validate_tensor(values)
    contraction = [{j * m + k: Fraction(values[i][j][k]) for j in range(n) for k in range(m) if values[i][j][k]} for i in range(n)]
    return kernel(contraction)


def pairing_nondegenerate(values: Sequence[Sequence[Sequence[Fraction | int]]]) -> bool:
    """True iff ``v ↦ v ∪ (-)`` is injective on ``H^1``.

    Raises:
        CupDataError: If the tensor is not antisymmetric or its shape is inconsistent.
    """
    return not pairing_kernel(values)
