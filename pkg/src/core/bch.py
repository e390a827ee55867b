"""Baker-Campbell-Hausdorff series and the Malcev group law on graded quotients.

``bch`` is computed as ``log(exp(a) exp(b))`` in the truncated free
associative algebra and projected back onto the Lyndon basis. Group elements
of a quotient are represented by their logarithms, so the product is the BCH
series evaluated with the quotient's structure constants.
"""

from __future__ import annotations

import functools
import itertools
import logging
import math
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import override

from lie import tensor
from lie.exceptions import CapExceededError, ConsistencyError, LatticeError, MismatchError, UnknownGeneratorError
from lie.free_lie import FreeLieAlgebra, Generator, LieElement, format_rational
from lie.linalg import EchelonBasis

from .config import get_config
from .nilpotent import GradedQuotient, QuotientElement

logger = logging.getLogger(__name__)


def _bch_limit(class_: int, limit: int | None) -> None:
    limit = get_config()["limits"]["bch_max_class"] if limit is None else limit
    if class_ > limit:
        raise CapExceededError("bch_max_class", class_, limit)


def bch(a: LieElement, b: LieElement, class_: int, *, max_class: int | None = None) -> LieElement:
    """``log(exp(a) exp(b))`` truncated at bracket length ``class_``.

    Args:
        a: Left factor.
        b: Right factor, over the same generators as ``a``.
        class_: Truncation class.
        max_class: Hard limit; defaults to ``limits.bch_max_class``.

    Returns:
        The BCH element in the free Lie algebra with cap ``class_``.

    Raises:
        MismatchError: If the generators differ.
        CapExceededError: If ``class_`` is above the limit.
        ConsistencyError: If the result is not a Lie element.
    """
    if a.algebra.generators != b.algebra.generators:
        raise MismatchError(f"bch of elements over {a.algebra!r} and {b.algebra!r}")
    if class_ < 1:
        raise ValueError(f"class must be >= 1, got {class_}")
    _bch_limit(class_, max_class)

    algebra = a.algebra.with_class_cap(class_)
    left = tensor.to_associative(algebra.element(a.coeffs))
    right = tensor.to_associative(algebra.element(b.coeffs))
    product = tensor.multiply(tensor.exp(left, class_), tensor.exp(right, class_), class_)
    result = tensor.from_associative(tensor.log(product, class_), algebra)
    logger.debug("bch at class %d: %d terms", class_, len(result.coeffs))
    return result


@functools.lru_cache(maxsize=16)
def _universal_series(class_: int) -> LieElement:
    algebra = FreeLieAlgebra((Generator("X"), Generator("Y")), class_)
    return bch(algebra.generator("X"), algebra.generator("Y"), class_, max_class=class_)


def bch_series(class_: int) -> LieElement:
    """The universal series ``bch(X, Y)`` on two weight-1 generators.

    Bounded by ``limits.max_class`` rather than ``limits.bch_max_class``, so
    every quotient the engine accepts has a group law.
    """
    limit = get_config()["limits"]["max_class"]
    if class_ > limit:
        raise CapExceededError("max_class", class_, limit)
    return _universal_series(class_)


def _compositions(total: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Sequences of pairs ``(r, s)`` with ``r + s >= 1`` and ``sum(r + s) == total``."""
    if total == 0:
        yield ()
        return
    for size in range(1, total + 1):
        for r in range(size + 1):
            for rest in _compositions(total - size):
                yield ((r, size - r),) + rest


def bch_dynkin_component(x: LieElement, y: LieElement, n: int) -> LieElement:
    """The degree-``n`` BCH term by Dynkin's formula.

    ``sum over k and (r_i, s_i) of (-1)**(k-1) / (k * n * prod(r_i! s_i!))``
    times the right-nested bracket of ``x^r1 y^s1 ... x^rk y^sk``.
    """
    if x.algebra != y.algebra:
        raise MismatchError("bch_dynkin_component needs elements of one algebra")
    algebra = x.algebra
    total = algebra.zero()
    for blocks in _compositions(n):
        letters: list[LieElement] = []
        for r, s in blocks:
            letters.extend([x] * r + [y] * s)
        nested = letters[-1]
        for letter in reversed(letters[:-1]):
            nested = letter.bracket(nested)
        if not nested:
            continue
        k = len(blocks)
        denominator = k * n * math.prod(math.factorial(r) * math.factorial(s) for r, s in blocks)
        total = total + nested * Fraction((-1) ** (k - 1), denominator)
    return total


# --- Group layer ---
@dataclass(frozen=True)
class GroupElement:
    """``exp(log)`` in the Malcev group of a quotient."""

    log: QuotientElement

    @property
    def quotient(self) -> GradedQuotient:
        return self.log.quotient

    def render(self) -> str:
        return self.log.render()

    @override
    def __repr__(self) -> str:
        return f"GroupElement({self.render()})"


def identity(u: GradedQuotient) -> GroupElement:
    return GroupElement(u.zero())


def group_mul(u: GradedQuotient, a: GroupElement, b: GroupElement) -> GroupElement:
    """``a·b`` with ``log(a·b) = bch(log a, log b)`` in the quotient."""
    if a.quotient != u or b.quotient != u:
        raise MismatchError("group elements of different quotients")
    class_ = max(u.nilpotency_class, 1)
    series = bch_series(class_)
    return GroupElement(u.element(u.evaluate(series, [a.log.coords, b.log.coords])))


def group_inverse(a: GroupElement) -> GroupElement:
    """``a⁻¹`` with logarithm ``-log a``."""
    return GroupElement(-a.log)


def commutator(u: GradedQuotient, a: GroupElement, b: GroupElement) -> GroupElement:
    """The group commutator ``a·b·a⁻¹·b⁻¹``."""
    return group_mul(u, group_mul(u, group_mul(u, a, b), group_inverse(a)), group_inverse(b))


# --- Automorphisms ---
@dataclass
class AutomorphismResult:
    """Outcome of :func:`automorphism_check`."""

    is_automorphism: bool
    reason: str | None = None
    images: dict[str, str] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.is_automorphism


def _linear_map(u: GradedQuotient, images: Sequence[Mapping[int, Fraction]]) -> list[dict[int, Fraction]]:
    return [u.evaluate(u.lift({i: Fraction(1)}), images) for i in range(u.dimension)]


def _apply(columns: Sequence[Mapping[int, Fraction]], vector: Mapping[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, c in vector.items():
        for k, v in columns[i].items():
            out[k] = out.get(k, Fraction(0)) + c * v
    return {k: v for k, v in out.items() if v}


def automorphism_check(u: GradedQuotient, images: Mapping[str, QuotientElement], *, sample_size: int | None = None) -> AutomorphismResult:
    """Checks that a generator assignment extends to a Lie automorphism of ``u``.

    The assignment is extended bracket-multiplicatively; it must kill every
    relation and be invertible. On success the BCH product is checked to be
    equivariant on a deterministic sample, which raises ConsistencyError if
    it ever fails.
    """
    names = u.presentation.names
    for name, image in images.items():
        if name not in names:
            raise UnknownGeneratorError(name)
        if image.quotient != u:
            raise MismatchError(f"image of '{name}' lies outside the quotient")
    missing = [n for n in names if n not in images]
    if missing:
        return AutomorphismResult(False, f"no image given for {', '.join(missing)}")

    vectors = [dict(images[name].coords) for name in names]
    for index, relation in enumerate(u.presentation.relations):
        if u.evaluate(relation, vectors):
            return AutomorphismResult(False, f"relation {index + 1} ({relation.render()}) is not preserved")

    columns = _linear_map(u, vectors)
    rendered = {u.label(i): u.element(columns[i]).render() for i in range(u.dimension)}
    echelon = EchelonBasis()
    dependencies = echelon.extend(columns)
    if dependencies:
        kernel = u.element(dependencies[0]).render()
        return AutomorphismResult(False, f"not invertible: {kernel} maps to 0", rendered)

    size = get_config()["obstruction"]["group_sample_size"] if sample_size is None else sample_size
    sample = [GroupElement(u.basis_element(i)) for i in range(min(size, u.dimension))]
    sample.append(GroupElement(u.element({i: Fraction(i + 1) for i in range(u.dimension)})))
    for a, b in itertools.product(sample, repeat=2):
        lhs = _apply(columns, group_mul(u, a, b).log.coords)
        rhs = group_mul(u, GroupElement(u.element(_apply(columns, a.log.coords))), GroupElement(u.element(_apply(columns, b.log.coords))))
        if lhs != dict(rhs.log.coords):
            raise ConsistencyError(f"automorphism is not BCH-equivariant on ({a.render()}, {b.render()})")
    return AutomorphismResult(True, None, rendered)


# --- Lattices ---
@dataclass(frozen=True)
class LatticeSpec:
    """A full-rank lattice basis of a quotient."""

    basis: tuple[QuotientElement, ...]


@dataclass
class LatticeResult:
    """Outcome of :func:`lattice_closed`; ``offending`` names the failing product."""

    closed: bool
    offending: tuple[str, str] | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.closed


def lattice_closed(u: GradedQuotient, lat: LatticeSpec) -> LatticeResult:
    """Checks that the lattice is closed under products and inverses of signed basis pairs.

    Raises:
        LatticeError: If the basis is dependent or does not span the quotient.
    """
    if any(b.quotient != u for b in lat.basis):
        raise MismatchError("lattice basis element outside the quotient")
    coordinates = EchelonBasis()
    if coordinates.extend(b.coords for b in lat.basis):
        raise LatticeError("lattice basis is linearly dependent")
    if coordinates.rank != u.dimension:
        raise LatticeError(f"lattice basis has rank {coordinates.rank}, the quotient has dimension {u.dimension}")

    def integral(element: GroupElement) -> str | None:
        solution = coordinates.solve(element.log.coords)
        if solution is None:
            raise ConsistencyError("product left the span of the lattice basis")
        for index, value in sorted(solution.items()):
            if value.denominator != 1:
                return f"coordinate {format_rational(value)} on basis element {index + 1}"
        return None

    elements = [GroupElement(b) for b in lat.basis]
    labels = [b.render() for b in lat.basis]
    for i, a in enumerate(elements):
        problem = integral(group_inverse(a))
        if problem:
            return LatticeResult(False, (labels[i], labels[i]), f"inverse has {problem}")
    for (i, a), (j, b) in itertools.product(enumerate(elements), repeat=2):
        for sa, sb in itertools.product((1, -1), repeat=2):
            left = a if sa == 1 else group_inverse(a)
            right = b if sb == 1 else group_inverse(b)
            problem = integral(group_mul(u, left, right))
            if problem:
                pair = (("" if sa == 1 else "-") + f"({labels[i]})", ("" if sb == 1 else "-") + f"({labels[j]})")
                logger.info("lattice not closed: %s * %s has %s", pair[0], pair[1], problem)
                return LatticeResult(False, pair, f"product has {problem}")
    return LatticeResult(True)
