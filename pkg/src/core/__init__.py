"""
This module provides the services built on the free Lie algebra primitives:
nilpotent quotients, the BCH group law, cohomology and the obstruction battery.
"""

from .bch import bch, group_mul
from .config import get_config
from .nilpotent import GradedQuotient, LiePresentation, nilpotent_quotient
from .presentation_file import parse_presentation, read_presentation

__all__ = [
    "GradedQuotient",
    "LiePresentation",
    "bch",
    "get_config",
    "group_mul",
    "nilpotent_quotient",
    "parse_presentation",
    "read_presentation",
]
