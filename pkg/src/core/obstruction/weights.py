"""Weight-grading feasibility of presentations."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable

from lie.exceptions import CapExceededError

from ..config import get_config
from ..nilpotent import LiePresentation, minimal_relations
from .models import FeasibilityResult, WeightAssignment, WeightViolation

logger = logging.getLogger(__name__)


def weight_feasibility(
    pres: LiePresentation,
    allowed_gen_weights: Iterable[int],
    allowed_rel_weights: Iterable[int],
    *,
    search_limit: int | None = None,
) -> FeasibilityResult:
    """Searches generator weights under which every minimal relation is homogeneous of an allowed weight.

    Assignments are tried in lexicographic order over the sorted allowed
    generator weights; the first feasible one is returned. Otherwise the
    certificate holds, for each assignment, its first violating component
    (a relation split into several weights, or a weight outside the allowed set).

    Args:
        pres: The presentation.
        allowed_gen_weights: Weights a generator may carry.
        allowed_rel_weights: Weights a relation component may carry.
        search_limit: Cap on the number of assignments; defaults to ``limits.weight_search_limit``.

    Raises:
        ValueError: If an allowed set is empty or not positive.
        CapExceededError: If the search space is above the limit.
    """
    gen_weights = sorted(set(allowed_gen_weights))
    rel_weights = set(allowed_rel_weights)
    if not gen_weights or not rel_weights or min(gen_weights) < 1 or min(rel_weights) < 1:
        raise ValueError("allowed weight sets must be nonempty sets of positive integers")
    limit = get_config()["limits"]["weight_search_limit"] if search_limit is None else search_limit
    space = len(gen_weights) ** len(pres.generators)
    if space > limit:
        raise CapExceededError("weight_search_limit", space, limit)

    relations = minimal_relations(pres)
    certificate: list[WeightViolation] = []
    for assignment in itertools.product(gen_weights, repeat=len(pres.generators)):
        induced: list[int] = []
        violation: WeightViolation | None = None
        for relation in relations:
            components = relation.element.weight_components(assignment)
            if len(components) > 1:
                # a relation must stay weight-homogeneous
                if violation is None:
                    violation = WeightViolation(assignment, relation.render(), max(components), homogeneous=False)
                continue
            for weight, component in components.items():
                induced.append(weight)
                if weight not in rel_weights and violation is None:
                    violation = WeightViolation(assignment, component.render(), weight)
        if violation is None:
            logger.info("feasible weights %s", assignment)
            return FeasibilityResult(WeightAssignment(tuple(zip(pres.names, assignment, strict=True)), tuple(sorted(induced))))
        certificate.append(violation)
    logger.info("no feasible weights among %d assignments", space)
    return FeasibilityResult(None, certificate)
