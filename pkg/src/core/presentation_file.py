"""Presentation files and cup-data files.

A presentation file is line oriented::

    # Heisenberg
    class 3
    gen x
    gen y:1
    rel [x,[x,y]]
    rel [y,[x,y]]

Relations use the expression grammar ``expr := term (('+'|'-') term)*``,
``term := [rational '*'] factor``, ``factor := name | '[' expr ',' expr ']'``,
``rational := int ['/' posint]``; whitespace is insignificant. Cup data for
``build-from-cup`` is a TOML document (see :func:`load_cup_data`).
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

import pyparsing as pp
import toml

from lie.exceptions import CupDataError, LieAlgebraError, ParseError
from lie.free_lie import Bracket, Combination, Expr, FreeLieAlgebra, Generator, Symbol, format_rational

from .nilpotent import LiePresentation
from .obstruction.models import CupData

logger = logging.getLogger(__name__)


# --- Expression grammar ---
def _combination(tokens: pp.ParseResults) -> Expr:
    items = list(tokens)
    sign = 1
    terms: list[tuple[Fraction, Expr]] = []
    for item in items:
        if item == "+":
            sign = 1
        elif item == "-":
            sign = -1
        else:
            coeff, expr = item
            terms.append((sign * coeff, expr))
            sign = 1
    if len(terms) == 1 and terms[0][0] == 1:
        return terms[0][1]
    return Combination(tuple(terms))


def _rational(text: str, loc: int, tokens: pp.ParseResults) -> Fraction:
    numerator, _, denominator = tokens[0].partition("/")
    if denominator and int(denominator) == 0:
        raise pp.ParseException(text, loc, "zero denominator")
    return Fraction(int(numerator), int(denominator or 1))


@functools.cache
def _expression_grammar() -> pp.ParserElement:
    integer = pp.Word(pp.nums)
    rational = pp.Combine(integer + pp.Optional("/" + integer)).set_parse_action(_rational)
    name = pp.Word(pp.alphas + "_", pp.alphanums + "_").set_parse_action(lambda t: Symbol(t[0]))
    expr = pp.Forward()
    bracket = (pp.Suppress("[") + expr + pp.Suppress(",") + expr + pp.Suppress("]")).set_parse_action(lambda t: Bracket(t[0], t[1]))
    factor = name | bracket
    scaled = (rational + pp.Suppress("*") + factor).set_parse_action(lambda t: [(t[0], t[1])])
    plain = factor.copy().add_parse_action(lambda t: [(Fraction(1), t[0])])
    term = scaled | plain
    sign = pp.one_of("+ -")
    expr <<= (pp.Optional(sign) + term + pp.ZeroOrMore(sign + term)).set_parse_action(_combination)
    return expr


def parse_expression(text: str, source: str = "<expression>", line: int | None = None, offset: int = 0) -> Expr:
    """Parses a bracket expression into a formal :data:`Expr`.

    Raises:
        ParseError: With the 1-based column of the failure.
    """
    try:
        return _expression_grammar().parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise ParseError(f"invalid expression: {e.msg}", line, offset + e.col, source) from e


# --- Presentation files ---
@dataclass(frozen=True)
class _Relation:
    expr: Expr
    line: int
    column: int


def parse_presentation(text: str, source: str = "<input>") -> LiePresentation:
    """Parses presentation-file text.

    Raises:
        ParseError: For syntax errors, duplicate or missing directives and bad relations.
    """
    class_cap: int | None = None
    generators: list[Generator] = []
    relations: list[_Relation] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        stripped = content.lstrip()
        if not stripped:
            continue
        indent = len(content) - len(stripped)
        keyword = stripped.split(None, 1)[0]
        rest = stripped[len(keyword) :]
        argument = rest.strip()
        column = indent + len(keyword) + (len(rest) - len(rest.lstrip())) + 1
        if keyword == "class":
            if class_cap is not None:
                raise ParseError("duplicate class directive", number, indent + 1, source)
            if not argument.isdigit() or int(argument) < 1:
                raise ParseError(f"class expects a positive integer, got '{argument}'", number, column, source)
            class_cap = int(argument)
        elif keyword == "gen":
            name, _, weight = argument.partition(":")
            if weight and not weight.strip().isdigit():
                raise ParseError(f"invalid weight '{weight.strip()}'", number, column + len(name) + 1, source)
            try:
                generators.append(Generator(name.strip(), int(weight) if weight else 1))
            except LieAlgebraError as e:
                raise ParseError(e.args[0], number, column, source) from e
        elif keyword == "rel":
            if not argument:
                raise ParseError("rel expects an expression", number, indent + 1, source)
            relations.append(_Relation(parse_expression(argument, source, number, column - 1), number, column))
        else:
            raise ParseError(f"unknown directive '{keyword}'", number, indent + 1, source)

    if class_cap is None:
        raise ParseError("missing class directive", None, None, source)
    if not generators:
        raise ParseError("at least one gen directive is required", None, None, source)
    try:
        algebra = FreeLieAlgebra(generators, class_cap)
    except LieAlgebraError as e:
        raise ParseError(e.args[0], None, None, source) from e

    elements = []
    for relation in relations:
        try:
            element = algebra.rewrite(relation.expr)
        except LieAlgebraError as e:
            raise ParseError(e.args[0], relation.line, relation.column, source) from e
        if not element:
            raise ParseError("relation is zero after normal-forming", relation.line, relation.column, source)
        if 1 in element.degrees():
            raise ParseError("relation has a degree-1 component", relation.line, relation.column, source)
        elements.append(element)
    presentation = LiePresentation(tuple(generators), class_cap, tuple(elements))
    logger.debug("parsed %s: %d generators, %d relations, class %d", source, len(generators), len(elements), class_cap)
    return presentation


def read_presentation(path: Path) -> LiePresentation:
    """Reads and parses a presentation file."""
    try:
        data = path.read_bytes()
    except OSError as e:
        raise ParseError(f"cannot read file: {e.strerror}", None, None, str(path)) from e
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        column = e.start - (data.rfind(b"\n", 0, e.start) + 1) + 1
        raise ParseError(f"invalid UTF-8 byte 0x{data[e.start]:02x} at offset {e.start}", line, column, str(path)) from e
    return parse_presentation(text, str(path))


def format_presentation(pres: LiePresentation) -> str:
    """Canonical file text for a presentation; parsing it gives back an equal presentation."""
    lines = [f"class {pres.class_cap}"]
    for generator in pres.generators:
        lines.append(f"gen {generator.name}" if generator.weight == 1 else f"gen {generator.name}:{generator.weight}")
    lines.extend(f"rel {relation.render()}" for relation in pres.relations)
    return "\n".join(lines) + "\n"


# --- Cup data ---
def parse_cup_data(document: dict[str, Any], source: str = "<cup data>") -> CupData:
    """Builds :class:`CupData` from a TOML document.

    The document lists ``h1`` and ``h2`` basis names and one ``[[cup]]``
    table per nonzero value ``left ∪ right = value * h2``; the antisymmetric
    partner is filled in::

        h1 = ["a", "b"]
        h2 = ["w"]

        [[cup]]
        left = "a"
        right = "b"
        h2 = "w"
        value = "1"
    """
    try:
        h1 = [str(n) for n in document.get("h1", [])]
        h2 = [str(n) for n in document.get("h2", [])]
        entries = document.get("cup", [])
    except (AttributeError, TypeError) as e:
        raise CupDataError(f"{source}: malformed cup data: {e}") from e
    if len(set(h1)) != len(h1) or len(set(h2)) != len(h2):
        raise CupDataError(f"{source}: duplicate basis names")

    n, m = len(h1), len(h2)
    values: list[list[list[Fraction | None]]] = [[[None] * m for _ in range(n)] for _ in range(n)]
    for number, entry in enumerate(entries, start=1):
        try:
            i, j, k = h1.index(entry["left"]), h1.index(entry["right"]), h2.index(entry["h2"])
            value = Fraction(str(entry.get("value", 1)))
        except (KeyError, ValueError, ZeroDivisionError) as e:
            raise CupDataError(f"{source}: cup entry {number} is invalid ({e})") from e
        if i == j and value:
            raise CupDataError(f"{source}: cup entry {number} pairs '{h1[i]}' with itself")
        for (a, b), v in (((i, j), value), ((j, i), -value)):
            current = values[a][b][k]
            if current is not None and current != v:
                raise CupDataError(f"{source}: cup entry {number} contradicts an earlier entry (not antisymmetric)")
            values[a][b][k] = v
    dense = [[[v if v is not None else Fraction(0) for v in cell] for cell in row] for row in values]
    return CupData(tuple(h1), tuple(h2), dense)


def load_cup_data(path: Path) -> CupData:
    """Reads a TOML cup-data file."""
    try:
        with path.open("r", encoding="utf-8") as f:
            document = toml.load(f)
    except OSError as e:
        raise ParseError(f"cannot read file: {e.strerror}", None, None, str(path)) from e
    except toml.TomlDecodeError as e:
        raise ParseError(f"invalid TOML: {e.msg}", e.lineno, e.colno, str(path)) from e
    return parse_cup_data(document, str(path))


def format_cup_data(data: CupData) -> str:
    """TOML text for cup data, one table per nonzero upper-triangular value."""
    entries = [
        {"left": data.h1[i], "right": data.h1[j], "h2": data.h2[k], "value": format_rational(data.cup[i][j][k])}
        for i in range(data.dim_h1)
        for j in range(i + 1, data.dim_h1)
        for k in range(data.dim_h2)
        if data.cup[i][j][k]
    ]
    return toml.dumps({"h1": list(data.h1), "h2": list(data.h2), "cup": entries})
