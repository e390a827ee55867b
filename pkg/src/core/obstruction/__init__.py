"""Obstructions to realizing nilpotent presentations by smooth varieties.

Components:
- models: verdicts, witnesses, weight assignments and cup data
- weights: weight-grading feasibility search
- criteria: the smooth and smooth-proper check batteries
- cup_presentation: quadratic presentations predicted by cup data

Directory runs live in ``core.obstruction.batch``.
"""

from .criteria import check_smooth, check_smooth_proper, massey_quotient, reverify_witness, run_checks
from .cup_presentation import cup_round_trip, presentation_from_cup
from .models import CupData, FeasibilityResult, Verdict, WeightAssignment, WeightViolation, Witness
from .weights import weight_feasibility

__all__ = [
    "CupData",
    "FeasibilityResult",
    "Verdict",
    "WeightAssignment",
    "WeightViolation",
    "Witness",
    "check_smooth",
    "check_smooth_proper",
    "cup_round_trip",
    "massey_quotient",
    "presentation_from_cup",
    "reverify_witness",
    "run_checks",
    "weight_feasibility",
]
