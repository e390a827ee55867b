"""Machine-readable reports.

Every command produces a :class:`Report`. ``--json`` prints
``report.model_dump_json(indent=2)``; parsing that text with
:meth:`Report.from_json` gives back an equal report. Rationals are carried as
strings in lowest terms (``"-1/12"``) so the document stays exact.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from lie.free_lie import LieElement, format_rational

from .bch import AutomorphismResult, LatticeResult
from .cohomology.classes import CohomologyGroup, CupTensor
from .cohomology.complex import cochain_complex
from .cohomology.massey import MasseyResult
from .config import get_config
from .nilpotent import GradedQuotient, LiePresentation, lcs_dims, minimal_relation_degrees
from .obstruction.models import Verdict, Witness

logger = logging.getLogger(__name__)


class _Model(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class SplitRelation(_Model):
    index: int
    degrees: list[int]


class Term(_Model):
    coefficient: str
    bracket: str


class MasseyTripleOut(_Model):
    indices: list[int]
    classes: list[str]
    representative: str


class WitnessOut(_Model):
    """Failure evidence of one check; only the fields of that check are filled."""

    check: str
    message: str
    degrees: list[int] = Field(default_factory=list)
    allowed_degrees: list[int] = Field(default_factory=list)
    allowed_generator_weights: list[int] = Field(default_factory=list)
    allowed_relation_weights: list[int] = Field(default_factory=list)
    violations: int = 0
    kernel_vector: list[str] = Field(default_factory=list)
    massey: MasseyTripleOut | None = None


class VerdictOut(_Model):
    mode: str
    outcome: str
    checks_run: list[str]
    witnesses: list[WitnessOut] = Field(default_factory=list)


class BchSection(_Model):
    bch_class: int
    generators: list[str]
    expression: str
    terms: list[Term]


class BettiOut(_Model):
    degree: int
    dimension: int
    representatives: list[str]


class CohomologySection(_Model):
    betti: list[BettiOut]


class CupSection(_Model):
    h1: list[str]
    h2: list[str]
    values: list[list[list[str]]]
    nondegenerate: bool
    dual_to_bracket: bool


class MasseySection(_Model):
    classes: list[str]
    status: str
    representative: str | None = None
    indeterminacy: list[str] = Field(default_factory=list)


class LatticeOut(_Model):
    basis: list[str]
    closed: bool
    offending: list[str] | None = None
    detail: str | None = None


class AutomorphismOut(_Model):
    images: dict[str, str]
    is_automorphism: bool
    reason: str | None = None


class GroupSection(_Model):
    a: str
    b: str
    product: str
    inverse_a: str
    commutator: str
    lattice: LatticeOut | None = None
    automorphism: AutomorphismOut | None = None


class FileResult(_Model):
    path: str
    outcome: str | None = None
    relation_degrees: list[int] = Field(default_factory=list)
    verdicts: list[VerdictOut] = Field(default_factory=list)
    error: str | None = None


class Report(_Model):
    """Everything a command computed, in a fixed field order."""

    command: str
    source: str | None = None
    generators: list[str] = Field(default_factory=list)
    class_cap: int | None = None
    dims: list[int] = Field(default_factory=list)
    lcs_dims: list[int] = Field(default_factory=list)
    relation_degrees: list[int] = Field(default_factory=list)
    split_relations: list[SplitRelation] = Field(default_factory=list)
    verdicts: list[VerdictOut] = Field(default_factory=list)
    checks_run: list[str] = Field(default_factory=list)
    bch: BchSection | None = None
    cohomology: CohomologySection | None = None
    cup: CupSection | None = None
    massey: MasseySection | None = None
    group: GroupSection | None = None
    presentation: str | None = None
    cup_round_trip: bool | None = None
    files: list[FileResult] = Field(default_factory=list)
    caveat: str = ""

    @property
    def excluded(self) -> bool:
        return any(v.outcome == "excluded" for v in self.verdicts) or any(f.outcome == "excluded" for f in self.files)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.model_validate_json(text)


def report_schema() -> dict[str, Any]:
    """The JSON schema every ``--json`` document validates against."""
    return Report.model_json_schema()


# --- Builders ---
def caveat() -> str:
    return get_config()["report"]["caveat"]


def presentation_fields(pres: LiePresentation, quotient: GradedQuotient | None = None) -> dict[str, Any]:
    """Fields shared by every report about one presentation."""
    fields: dict[str, Any] = {
        "generators": list(pres.names),
        "class_cap": pres.class_cap,
        "relation_degrees": minimal_relation_degrees(pres),
        "split_relations": [SplitRelation(index=r.index, degrees=list(r.degrees)) for r in pres.split_relations()],
    }
    if quotient is not None:
        fields["dims"] = list(quotient.dims)
        fields["lcs_dims"] = lcs_dims(quotient)
    return fields


def witness_out(witness: Witness) -> WitnessOut:
    triple = witness.massey
    return WitnessOut(
        check=witness.check.value,
        message=witness.message,
        degrees=list(witness.degrees),
        allowed_degrees=list(witness.allowed_degrees),
        allowed_generator_weights=list(witness.allowed_generator_weights),
        allowed_relation_weights=list(witness.allowed_relation_weights),
        violations=witness.violations,
        kernel_vector=[format_rational(c) for c in witness.kernel_vector],
        massey=MasseyTripleOut(indices=list(triple.indices), classes=list(triple.classes), representative=triple.representative) if triple else None,
    )


def verdict_out(verdict: Verdict) -> VerdictOut:
    return VerdictOut(
        mode=verdict.mode.value,
        outcome=verdict.outcome.value,
        checks_run=[c.value for c in verdict.checks_run],
        witnesses=[witness_out(w) for w in verdict.witnesses],
    )


def bch_section(element: LieElement, class_: int) -> BchSection:
    return BchSection(
        bch_class=class_,
        generators=list(element.algebra.names),
        expression=element.render(),
        terms=[Term(coefficient=format_rational(c), bracket=element.algebra.render_word(w)) for w, c in element.terms()],
    )


def cohomology_section(groups: Sequence[CohomologyGroup]) -> CohomologySection:
    return CohomologySection(
        betti=[BettiOut(degree=g.degree, dimension=g.dimension, representatives=[c.render() for c in g.basis]) for g in groups],
    )


def cup_section(tensor: CupTensor, *, nondegenerate: bool, dual_to_bracket: bool) -> CupSection:
    return CupSection(
        h1=list(tensor.h1),
        h2=list(tensor.h2),
        values=[[[format_rational(v) for v in cell] for cell in row] for row in tensor.values],
        nondegenerate=nondegenerate,
        dual_to_bracket=dual_to_bracket,
    )


def massey_section(u: GradedQuotient, classes: Sequence[str], result: MasseyResult) -> MasseySection:
    complex_ = cochain_complex(u)
    return MasseySection(
        classes=list(classes),
        status=result.status.value,
        representative=result.representative.render() if result.representative is not None else None,
        indeterminacy=[complex_.render(c) for c in result.indeterminacy],
    )


def lattice_out(basis: Sequence[str], result: LatticeResult) -> LatticeOut:
    return LatticeOut(basis=list(basis), closed=result.closed, offending=list(result.offending) if result.offending else None, detail=result.detail)


def automorphism_out(result: AutomorphismResult) -> AutomorphismOut:
    return AutomorphismOut(images=dict(result.images), is_automorphism=result.is_automorphism, reason=result.reason)
