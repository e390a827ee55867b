"""Chevalley-Eilenberg cohomology of graded nilpotent quotients.

The module is organized into focused components:
- complex: cochains, the differential and graded components
- classes: classes, Betti numbers, cup products and pairings
- massey: Massey triple products
- extensions: central extensions and lifting obstructions
"""

from .classes import (
    CohomologyClass,
    CohomologyGroup,
    CupTensor,
    betti,
    bracket_matrix,
    cup,
    cup_dual_to_bracket,
    cup_tensor,
    degree_one_class,
    dual_class,
    h1_basis,
    make_class,
    pairing_kernel,
    pairing_nondegenerate,
)
from .complex import Cochain, CochainComplex, Monomial, cochain_complex, d_squared_vanishes, wedge
from .extensions import ExtensionObstruction, LieHomomorphism, extension_lift_obstruction, pullback
from .massey import MasseyResult, MasseyTriple, massey, massey_sweep

__all__ = [
    "Cochain",
    "CochainComplex",
    "CohomologyClass",
    "CohomologyGroup",
    "CupTensor",
    "ExtensionObstruction",
    "LieHomomorphism",
    "MasseyResult",
    "MasseyTriple",
    "Monomial",
    "betti",
    "bracket_matrix",
    "cochain_complex",
    "cup",
    "cup_dual_to_bracket",
    "cup_tensor",
    "d_squared_vanishes",
    "degree_one_class",
    "dual_class",
    "extension_lift_obstruction",
    "h1_basis",
    "make_class",
    "massey",
    "massey_sweep",
    "pairing_kernel",
    "pairing_nondegenerate",
    "pullback",
    "wedge",
]
