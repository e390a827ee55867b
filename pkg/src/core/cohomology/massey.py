"""Massey triple products of degree-1 classes."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from lie.enums import MasseyStatus
from lie.exceptions import ConsistencyError, MismatchError
from lie.linalg import EchelonBasis, SparseVector

from ..nilpotent import GradedQuotient
from .classes import CohomologyClass, h1_basis
from .complex import Cochain, Monomial, add_cochains, cochain_complex, wedge

logger = logging.getLogger(__name__)


@dataclass
class MasseyResult:
    """Outcome of :func:`massey`.

    Attributes:
        status: undefined, vanishing or nonvanishing.
        representative: The class of ``a∧t + s∧c`` when defined.
        indeterminacy: Spanning cochains of ``a∪H^1 + H^1∪c``.
        defining: The chosen cochains ``(s, t)`` with ``ds = -a∧b`` and ``dt = -b∧c``.
    """

    status: MasseyStatus
    representative: CohomologyClass | None = None
    indeterminacy: list[Cochain] = field(default_factory=list)
    defining: tuple[Cochain, Cochain] | None = None

    @property
    def defined(self) -> bool:
        return self.status is not MasseyStatus.UNDEFINED

    def render(self) -> str:
        if self.representative is None:
            return self.status.value
        return f"{self.status.value}: {self.representative.render()}"


def _span_contains(generators: list[Cochain], target: Cochain) -> bool:
    columns: dict[Monomial, int] = {}

    def vector(cochain: Cochain) -> SparseVector:
        return {columns.setdefault(m, len(columns)): c for m, c in cochain.items()}

    echelon = EchelonBasis()
    echelon.extend(vector(g) for g in generators)
    return echelon.contains(vector(target))


def massey(u: GradedQuotient, a: CohomologyClass, b: CohomologyClass, c: CohomologyClass, *, reverse_solver: bool = False) -> MasseyResult:
    """The Massey triple product ``<a, b, c>``.

    Defined iff ``a∪b = 0`` and ``b∪c = 0``. The defining cochains are the
    least-index solutions of ``ds = -a∧b`` and ``dt = -b∧c`` (eliminated in
    reverse order with ``reverse_solver``). The product is nonvanishing iff
    ``a∧t + s∧c`` lies outside ``a∪H^1 + H^1∪c`` plus the coboundaries.
    """
    complex_ = cochain_complex(u)
    for cls in (a, b, c):
        if cls.complex is not complex_:
            raise MismatchError("Massey product of classes from another complex")
        if cls.degree != 1:
            raise MismatchError(f"Massey products take degree-1 classes, got degree {cls.degree}")

    ab = wedge(a.representative, b.representative)
    bc = wedge(b.representative, c.representative)
    s = complex_.solve_coboundary({m: -v for m, v in ab.items()}, reverse=reverse_solver)
    t = complex_.solve_coboundary({m: -v for m, v in bc.items()}, reverse=reverse_solver)
    if s is None or t is None:
        return MasseyResult(MasseyStatus.UNDEFINED)

    representative = add_cochains(wedge(a.representative, t), wedge(s, c.representative))
    if complex_.d(representative):
        raise ConsistencyError("Massey representative is not closed")

    h1 = h1_basis(u)
    indeterminacy = [p for h in h1 for p in (wedge(a.representative, h.representative), wedge(h.representative, c.representative)) if p]
    grades = set(complex_.grade_components(representative)) | {g for p in indeterminacy for g in complex_.grade_components(p)}
    coboundaries = [complex_.d({monomial: Fraction(1)}) for grade in sorted(grades) for monomial in complex_.component(1, grade)]
    vanishing = _span_contains(indeterminacy + [cb for cb in coboundaries if cb], representative)
    status = MasseyStatus.VANISHING if vanishing else MasseyStatus.NONVANISHING
    grade = None
    if a.grade is not None and b.grade is not None and c.grade is not None:
        grade = a.grade + b.grade + c.grade
    return MasseyResult(status, CohomologyClass(complex_, 2, representative, grade), indeterminacy, (s, t))


@dataclass(frozen=True)
class MasseyTriple:
    """A nonvanishing triple found by :func:`massey_sweep`."""

    indices: tuple[int, int, int]
    classes: tuple[str, str, str]
    representative: str


def massey_sweep(u: GradedQuotient, *, stop_at_first: bool = True) -> list[MasseyTriple]:
    """Nonvanishing Massey products over all triples of an ``H^1`` basis, in lexicographic order."""
    basis = h1_basis(u)
    found: list[MasseyTriple] = []
    for i, j, k in itertools.product(range(len(basis)), repeat=3):
        result = massey(u, basis[i], basis[j], basis[k])
        if result.status is MasseyStatus.NONVANISHING:
            assert result.representative is not None
            triple = MasseyTriple((i, j, k), (basis[i].render(), basis[j].render(), basis[k].render()), result.representative.render())
            logger.info("nonvanishing Massey product <%s, %s, %s>", *triple.classes)
            found.append(triple)
            if stop_at_first:
                break
    return found
