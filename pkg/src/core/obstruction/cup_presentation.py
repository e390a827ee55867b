"""Quadratic presentations predicted by cup-product data."""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction

from lie.exceptions import CupDataError, PresentationError
from lie.free_lie import FreeLieAlgebra, Generator
from lie.linalg import EchelonBasis, SparseVector, kernel

from ..cohomology.classes import cup_tensor
from ..config import get_config
from ..nilpotent import LiePresentation, nilpotent_quotient
from .models import CupData

logger = logging.getLogger(__name__)


def presentation_from_cup(data: CupData, *, nilpotency_depth: int | None = None) -> LiePresentation:
    """``L(H^1∨)/(∪̌ H^2∨)``: one quadratic relation per ``H^2`` basis element.

    Relation ``k`` is ``sum_{i<j} cup[i][j][k] [a_i, a_j]``; zero relations are
    skipped. The class cap is twice the nilpotency depth.
    """
    if not data.h1:
        raise CupDataError("cup data needs a nonzero H^1")
    depth = get_config()["obstruction"]["nilpotency_depth"] if nilpotency_depth is None else nilpotency_depth
    class_cap = max(2 * depth, 2)
    try:
        generators = tuple(Generator(name) for name in data.h1)
    except PresentationError as e:
        raise CupDataError(f"invalid H^1 basis name: {e}") from e
    algebra = FreeLieAlgebra(generators, class_cap)
    letters = [algebra.generator(name) for name in data.h1]
    relations = []
    for k, name in enumerate(data.h2):
        relation = algebra.zero()
        for i, j in itertools.combinations(range(data.dim_h1), 2):
            if data.cup[i][j][k]:
                relation = relation + letters[i].bracket(letters[j]) * data.cup[i][j][k]
        if relation:
            relations.append(relation)
        else:
            logger.warning("H^2 basis element '%s' is not hit by the cup product; no relation", name)
    return LiePresentation(generators, class_cap, tuple(relations))


def _pair_map(values: list[list[list[Fraction]]]) -> list[SparseVector]:
    n = len(values)
    return [{k: c for k, c in enumerate(values[i][j]) if c} for i, j in itertools.combinations(range(n), 2)]


def cup_round_trip(data: CupData, pres: LiePresentation | None = None) -> bool:
    """Checks that the quotient's cup tensor reproduces ``data`` up to a change of ``H^2`` basis.

    Both tensors are read as maps ``Λ²H^1 -> H^2``; they agree up to a change
    of basis of their images iff their kernels coincide.
    """
    pres = presentation_from_cup(data) if pres is None else pres
    quotient = nilpotent_quotient(pres.with_class_cap(2))
    produced = cup_tensor(quotient)
    if len(produced.h1) != data.dim_h1:
        return False
    input_kernel = EchelonBasis()
    input_kernel.extend(kernel(_pair_map(data.cup)))
    output_kernel = kernel(_pair_map(produced.values)) if produced.h2 else [{p: Fraction(1)} for p in range(len(_pair_map(data.cup)))]
    return input_kernel.rank == len(output_kernel) and all(input_kernel.contains(v) for v in output_kernel)
