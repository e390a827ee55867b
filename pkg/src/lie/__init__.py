"""Exact free Lie algebra primitives: words, elements, linear algebra and the tensor algebra."""

from .exceptions import (
    CapExceededError,
    ConsistencyError,
    CupDataError,
    ExpressionError,
    LatticeError,
    LieAlgebraError,
    MismatchError,
    NotClosedError,
    NotHomomorphismError,
    ParseError,
    PresentationError,
    UnknownGeneratorError,
)
from .free_lie import Bracket, Combination, Expr, FreeLieAlgebra, Generator, LieElement, Symbol, format_rational, lyndon_basis, rewrite
from .words import BracketWord, Word, is_basis_word, is_lyndon, lyndon_words, standard_bracketing, standard_factorization, witt_dim

__all__ = [
    "Bracket",
    "BracketWord",
    "CapExceededError",
    "Combination",
    "ConsistencyError",
    "CupDataError",
    "Expr",
    "ExpressionError",
    "FreeLieAlgebra",
    "Generator",
    "LatticeError",
    "LieAlgebraError",
    "LieElement",
    "MismatchError",
    "NotClosedError",
    "NotHomomorphismError",
    "ParseError",
    "PresentationError",
    "Symbol",
    "UnknownGeneratorError",
    "Word",
    "format_rational",
    "is_basis_word",
    "is_lyndon",
    "lyndon_basis",
    "lyndon_words",
    "rewrite",
    "standard_bracketing",
    "standard_factorization",
    "witt_dim",
]
