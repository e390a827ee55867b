"""
Custom exception classes for the exact Lie algebra engine.
"""

from __future__ import annotations

from typing import override


class LieAlgebraError(Exception):
    """
    Base exception for all engine errors.

    Attributes:
        kind: Stable machine-readable tag printed by the CLI as ``error[<kind>]``.
    """

    kind = "engine"

    def __init__(self, message: str) -> None:
        super().__init__(message)

    @override
    def __str__(self) -> str:
        return f"{type(self).__name__}: {super().__str__()}"


class ExpressionError(LieAlgebraError):
    """
    Raised for a malformed bracket expression.
    """

    kind = "expression"


class UnknownGeneratorError(ExpressionError):
    """
    Raised when an expression names a generator the algebra does not have.

    Attributes:
        name: The offending generator name.
    """

    kind = "unknown-generator"

    def __init__(self, name: str) -> None:
        super().__init__(f"unknown generator '{name}'")
        self.name = name


class ParseError(LieAlgebraError):
    """
    Raised when a presentation file or expression cannot be parsed.

    Attributes:
        line: 1-based line number of the failure, if known.
        column: 1-based column of the failure, if known.
        source: File name or other label for the parsed text.
    """

    kind = "parse"

    def __init__(self, message: str, line: int | None = None, column: int | None = None, source: str = "<input>") -> None:
        super().__init__(message)
        self.line = line
        self.column = column
        self.source = source

    @override
    def __str__(self) -> str:
        where = self.source
        if self.line is not None:
            where += f":{self.line}"
            if self.column is not None:
                where += f":{self.column}"
        return f"{where}: {self.args[0]}"


class PresentationError(LieAlgebraError):
    """
    Raised for a structurally invalid presentation (duplicate generators,
    degree-1 relations, relations over the wrong algebra, ...).
    """

    kind = "presentation"


class MismatchError(LieAlgebraError):
    """
    Raised when operands live in different algebras, quotients or complexes.
    """

    kind = "mismatch"


class CapExceededError(LieAlgebraError):
    """
    Raised when a request exceeds a configured hard limit.

    Attributes:
        limit_name: The configuration key that was exceeded.
        requested: The requested size.
        limit: The configured limit.
    """

    kind = "cap"

    def __init__(self, limit_name: str, requested: int, limit: int) -> None:
        super().__init__(f"{limit_name}={requested} exceeds the configured limit {limit}")
        self.limit_name = limit_name
        self.requested = requested
        self.limit = limit


class NotClosedError(LieAlgebraError):
    """
    Raised when a cochain that must be a cocycle is not closed.
    """

    kind = "not-closed"


class NotHomomorphismError(LieAlgebraError):
    """
    Raised when a linear map that must be a Lie homomorphism is not.

    Attributes:
        pair: The basis index pair on which the bracket is not preserved.
    """

    kind = "not-homomorphism"

    def __init__(self, message: str, pair: tuple[int, int] | None = None) -> None:
        super().__init__(message)
        self.pair = pair


class LatticeError(LieAlgebraError):
    """
    Raised for a lattice basis that is dependent or does not span the quotient.
    """

    kind = "lattice"


class CupDataError(LieAlgebraError):
    """
    Raised for cup data with inconsistent dimensions or a non-antisymmetric tensor.
    """

    kind = "cup-data"


class ConsistencyError(LieAlgebraError):
    """
    Raised when an internal exactness assertion fails (for example a BCH
    result that is not a Lie element). Seeing this is a bug.
    """

    kind = "consistency"
