"""Data models for the obstruction battery."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from lie.enums import CheckMode, CheckName, Outcome
from lie.exceptions import CupDataError

from ..cohomology.classes import pairing_kernel
from ..cohomology.massey import MasseyTriple


@dataclass(frozen=True)
class WeightAssignment:
    """Generator weights and the weights they induce on minimal relation components."""

    weights: tuple[tuple[str, int], ...]
    relation_weights: tuple[int, ...]

    def as_dict(self) -> dict[str, int]:
        return dict(self.weights)


@dataclass(frozen=True)
class WeightViolation:
    """One assignment and a relation component whose weight is not allowed.

    ``homogeneous`` is False when the relation splits into several weights;
    ``weight`` is then the largest of them.
    """

    assignment: tuple[int, ...]
    relation: str
    weight: int
    homogeneous: bool = True


@dataclass
class FeasibilityResult:
    """Outcome of a weight search: an assignment, or one violation per assignment tried."""

    assignment: WeightAssignment | None
    certificate: list[WeightViolation] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.assignment is not None


@dataclass
class Witness:
    """Machine-checkable reason for an excluded verdict.

    Only the fields of the failing check are set.
    """

    check: CheckName
    message: str
    degrees: tuple[int, ...] = ()
    allowed_degrees: tuple[int, ...] = ()
    allowed_generator_weights: tuple[int, ...] = ()
    allowed_relation_weights: tuple[int, ...] = ()
    violations: int = 0
    kernel_vector: tuple[Fraction, ...] = ()
    massey: MasseyTriple | None = None


@dataclass
class Verdict:
    """Outcome of a check battery."""

    mode: CheckMode
    outcome: Outcome
    witnesses: list[Witness] = field(default_factory=list)
    checks_run: list[CheckName] = field(default_factory=list)
    relation_degrees: list[int] = field(default_factory=list)

    @property
    def excluded(self) -> bool:
        return self.outcome is Outcome.EXCLUDED


@dataclass(frozen=True)
class CupData:
    """Abstract ``H^1``, ``H^2`` and an antisymmetric cup tensor ``cup[i][j][k]``."""

    h1: tuple[str, ...]
    h2: tuple[str, ...]
    cup: list[list[list[Fraction]]]

    def __post_init__(self) -> None:
        n, m = len(self.h1), len(self.h2)
        if len(self.cup) != n or any(len(row) != n or any(len(cell) != m for cell in row) for row in self.cup):
            raise CupDataError(f"cup tensor shape does not match dim H^1 = {n}, dim H^2 = {m}")
        pairing_kernel(self.cup)

    @property
    def dim_h1(self) -> int:
        return len(self.h1)

    @property
    def dim_h2(self) -> int:
        return len(self.h2)

    @classmethod
    def symplectic(cls, genus: int) -> CupData:
        """Cup data of a genus-``genus`` curve: ``a_i ∪ b_i = w``."""
        names = tuple(n for i in range(1, genus + 1) for n in (f"a{i}", f"b{i}"))
        size = len(names)
        cup = [[[Fraction(0)] for _ in range(size)] for _ in range(size)]
        for i in range(genus):
            cup[2 * i][2 * i + 1][0] = Fraction(1)
            cup[2 * i + 1][2 * i][0] = Fraction(-1)
        return cls(names, ("w",), cup)
