"""Necessary conditions for a nilpotent presentation to come from a smooth (proper) variety.

Smooth proper: the ideal is generated in bracket length 2 (quadratic), the
weights work out with generators of weight 1 and relations of weight 2, the
cup pairing ``H^1 x H^1 -> H^2`` is nondegenerate, and every defined Massey
triple product vanishes. Smooth: the ideal is generated in lengths 2, 3, 4
and the weights work out with generators of weight 1 or 2 and relations of
weight 2, 3 or 4.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from fractions import Fraction

from lie.enums import CheckMode, CheckName, MasseyStatus, Outcome

from ..cohomology.classes import cup_tensor, h1_basis, pairing_kernel
from ..cohomology.massey import massey, massey_sweep
from ..config import get_config
from ..nilpotent import GradedQuotient, LiePresentation, minimal_relation_degrees, nilpotent_quotient
from .models import Verdict, Witness
from .weights import weight_feasibility

logger = logging.getLogger(__name__)

SMOOTH_PROPER_DEGREES = (2,)
SMOOTH_DEGREES = (2, 3, 4)
SMOOTH_PROPER_WEIGHTS = ((1,), (2,))
SMOOTH_WEIGHTS = ((1, 2), (2, 3, 4))

Check = Callable[[LiePresentation], Witness | None]


def _degree_check(allowed: tuple[int, ...]) -> Check:
    def run(pres: LiePresentation) -> Witness | None:
        degrees = minimal_relation_degrees(pres)
        bad = tuple(d for d in degrees if d not in allowed)
        if not bad:
            return None
        listed = ", ".join(str(d) for d in degrees)
        return Witness(
            CheckName.RELATION_DEGREES,
            f"minimal relation degrees {{{listed}}} are not all in {{{', '.join(map(str, allowed))}}}",
            degrees=bad,
            allowed_degrees=allowed,
        )

    return run


def _weight_check(gen_weights: tuple[int, ...], rel_weights: tuple[int, ...]) -> Check:
    def run(pres: LiePresentation) -> Witness | None:
        result = weight_feasibility(pres, gen_weights, rel_weights)
        if result.feasible:
            return None
        first = result.certificate[0] if result.certificate else None
        if first is None:
            detail = ""
        elif first.homogeneous:
            detail = f"; e.g. weights {first.assignment} give {first.relation} weight {first.weight}"
        else:
            detail = f"; e.g. weights {first.assignment} split {first.relation} into several weights"
        return Witness(
            CheckName.WEIGHTS,
            f"no generator weights in {set(gen_weights)} put every relation in weights {set(rel_weights)}{detail}",
            allowed_generator_weights=gen_weights,
            allowed_relation_weights=rel_weights,
            violations=len(result.certificate),
        )

    return run


def _quadratic_part(pres: LiePresentation) -> GradedQuotient:
    return nilpotent_quotient(pres.with_class_cap(2))


def _cup_pairing_check(pres: LiePresentation) -> Witness | None:
    quotient = _quadratic_part(pres)
    tensor = cup_tensor(quotient)
    if not tensor.h1:
        return None
    kernel = pairing_kernel(tensor.values)
    if not kernel:
        return None
    vector = tuple(kernel[0].get(i, Fraction(0)) for i in range(len(tensor.h1)))
    if 2 not in minimal_relation_degrees(pres):
        message = "u/Γ_3 is free of class 2 on a nonzero H^1, so the cup product vanishes identically"
    else:
        message = "the cup pairing H^1 x H^1 -> H^2 is degenerate"
    return Witness(CheckName.CUP_PAIRING, message, kernel_vector=vector)


def massey_quotient(pres: LiePresentation, massey_class: int | None = None) -> GradedQuotient:
    """The quotient Massey products are computed in: the presentation at class exactly ``massey_class``."""
    target = get_config()["limits"]["massey_class"] if massey_class is None else massey_class
    return nilpotent_quotient(pres.with_class_cap(target))


def _massey_check(pres: LiePresentation) -> Witness | None:
    found = massey_sweep(massey_quotient(pres))
    if not found:
        return None
    triple = found[0]
    return Witness(
        CheckName.MASSEY,
        f"Massey product <{', '.join(triple.classes)}> is nonvanishing ({triple.representative})",
        massey=triple,
    )


def _battery(mode: CheckMode) -> list[tuple[CheckName, Check]]:
    if mode is CheckMode.SMOOTH_PROPER:
        return [
            (CheckName.RELATION_DEGREES, _degree_check(SMOOTH_PROPER_DEGREES)),
            (CheckName.WEIGHTS, _weight_check(*SMOOTH_PROPER_WEIGHTS)),
            (CheckName.CUP_PAIRING, _cup_pairing_check),
            (CheckName.MASSEY, _massey_check),
        ]
    return [
        (CheckName.RELATION_DEGREES, _degree_check(SMOOTH_DEGREES)),
        (CheckName.WEIGHTS, _weight_check(*SMOOTH_WEIGHTS)),
    ]


def run_checks(pres: LiePresentation, mode: CheckMode, *, full_battery: bool | None = None) -> Verdict:
    """Runs the battery of ``mode`` cheapest first, stopping at the first failure unless ``full_battery``."""
    full = get_config()["obstruction"]["full_battery"] if full_battery is None else full_battery
    verdict = Verdict(mode, Outcome.CONSISTENT, relation_degrees=minimal_relation_degrees(pres))
    for name, check in _battery(mode):
        verdict.checks_run.append(name)
        witness = check(pres)
        logger.info("%s check %s: %s", mode.value, name.value, "failed" if witness else "passed")
        if witness is not None:
            verdict.witnesses.append(witness)
            verdict.outcome = Outcome.EXCLUDED
            if not full:
                break
    return verdict


def check_smooth_proper(pres: LiePresentation, *, full_battery: bool | None = None) -> Verdict:
    """Quadratic relations, weights {1} -> {2}, a nondegenerate cup pairing and vanishing Massey products."""
    return run_checks(pres, CheckMode.SMOOTH_PROPER, full_battery=full_battery)


def check_smooth(pres: LiePresentation, *, full_battery: bool | None = None) -> Verdict:
    """Relations in lengths 2, 3, 4 and weights {1, 2} -> {2, 3, 4}."""
    return run_checks(pres, CheckMode.SMOOTH, full_battery=full_battery)


def reverify_witness(pres: LiePresentation, witness: Witness) -> bool:
    """Independently recomputes the failure a witness records."""
    match witness.check:
        case CheckName.RELATION_DEGREES:
            degrees = minimal_relation_degrees(pres)
            return bool(witness.degrees) and all(d in degrees and d not in witness.allowed_degrees for d in witness.degrees)
        case CheckName.WEIGHTS:
            result = weight_feasibility(pres, witness.allowed_generator_weights, witness.allowed_relation_weights)
            return not result.feasible
        case CheckName.CUP_PAIRING:
            tensor = cup_tensor(_quadratic_part(pres))
            vector = witness.kernel_vector
            if len(vector) != len(tensor.h1) or not any(vector):
                return False
            return all(
                sum((vector[i] * tensor.values[i][j][k] for i in range(len(vector))), Fraction(0)) == 0
                for j in range(len(tensor.h1))
                for k in range(len(tensor.h2))
            )
        case CheckName.MASSEY:
            if witness.massey is None:
                return False
            quotient = massey_quotient(pres)
            basis = h1_basis(quotient)
            i, j, k = witness.massey.indices
            if max(i, j, k) >= len(basis):
                return False
            return massey(quotient, basis[i], basis[j], basis[k], reverse_solver=True).status is MasseyStatus.NONVANISHING
    return False
