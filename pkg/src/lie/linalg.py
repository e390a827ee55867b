"""Exact sparse linear algebra over the rationals.

Vectors are sparse ``dict[int, Fraction]`` maps from a column index to a
nonzero coefficient. The only nontrivial structure is :class:`EchelonBasis`,
an incrementally maintained reduced row echelon form that remembers how each
of its rows was obtained from the inserted vectors, which is all the
elimination the engine needs: ranks, quotient complements, kernels and
least-index preimages.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction

SparseVector = dict[int, Fraction]


def clean(vector: Mapping[int, Fraction | int]) -> SparseVector:
    """Returns a copy of ``vector`` with Fraction values and no zero entries."""
    return {k: Fraction(v) for k, v in vector.items() if v}


def axpy(target: SparseVector, factor: Fraction | int, source: Mapping[int, Fraction]) -> None:
    """In place ``target += factor * source``; cancelled entries are removed."""
    if not factor:
        return
    for key, value in source.items():
        updated = target.get(key, 0) + factor * value
        if updated:
            target[key] = updated
        else:
            target.pop(key, None)


def scale(vector: Mapping[int, Fraction], factor: Fraction | int) -> SparseVector:
    """Returns ``factor * vector``."""
    if not factor:
        return {}
    return {k: v * factor for k, v in vector.items()}


def combine(terms: Iterable[tuple[Fraction | int, Mapping[int, Fraction]]]) -> SparseVector:
    """Returns the linear combination ``sum(c * v for c, v in terms)``."""
    out: SparseVector = {}
    for factor, vector in terms:
        axpy(out, factor, vector)
    return out


class EchelonBasis:
    """Reduced row echelon form over the rationals, built one vector at a time.

    The pivot of a row is its leftmost (smallest) nonzero column; rows are
    normalized to a pivot coefficient of 1 and are zero in every other row's
    pivot column. Each inserted vector gets the next input index, and every
    row keeps its expression as a combination of inputs, so the basis can
    report dependencies (kernels) and solve for preimages.
    """

    def __init__(self) -> None:
        self._rows: dict[int, SparseVector] = {}
        self._combos: dict[int, SparseVector] = {}
        self._inputs = 0

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        """Dimension of the span of the inserted vectors."""
        return len(self._rows)

    @property
    def inputs(self) -> int:
        """Number of vectors inserted so far."""
        return self._inputs

    @property
    def pivots(self) -> list[int]:
        """Pivot columns in increasing order."""
        return sorted(self._rows)

    def rows(self) -> list[SparseVector]:
        """Copies of the reduced rows, in pivot order."""
        return [dict(self._rows[p]) for p in self.pivots]

    def reduce(self, vector: Mapping[int, Fraction]) -> SparseVector:
        """Returns the normal form of ``vector`` modulo the span.

        The result has no entry in any pivot column, so two vectors are
        congruent modulo the span iff their normal forms are equal.
        """
        residual = clean(vector)
        for pivot in [p for p in residual if p in self._rows]:
            axpy(residual, -residual[pivot], self._rows[pivot])
        return residual

    def contains(self, vector: Mapping[int, Fraction]) -> bool:
        """True iff ``vector`` lies in the span."""
        return not self.reduce(vector)

    def add(self, vector: Mapping[int, Fraction]) -> SparseVector | None:
        """Inserts ``vector`` as the next input.

        Returns:
            None if the vector was independent of the previous inputs,
            otherwise the dependency it satisfies: coefficients ``c`` over
            input indices with ``sum(c[j] * input_j) == 0`` and ``c[new] == 1``.
        """
        index = self._inputs
        self._inputs += 1
        residual = clean(vector)
        combo: SparseVector = {index: Fraction(1)}
        for pivot in [p for p in residual if p in self._rows]:
            factor = residual[pivot]
            axpy(residual, -factor, self._rows[pivot])
            axpy(combo, -factor, self._combos[pivot])
        if not residual:
            return combo

        pivot = min(residual)
        inverse = 1 / residual[pivot]
        residual = scale(residual, inverse)
        combo = scale(combo, inverse)
        for other, row in self._rows.items():
            factor = row.get(pivot)
            if factor:
                axpy(row, -factor, residual)
                axpy(self._combos[other], -factor, combo)
        self._rows[pivot] = residual
        self._combos[pivot] = combo
        return None

    def extend(self, vectors: Iterable[Mapping[int, Fraction]]) -> list[SparseVector]:
        """Inserts every vector; returns the dependencies found along the way."""
        dependencies: list[SparseVector] = []
        for vector in vectors:
            dependency = self.add(vector)
            if dependency is not None:
                dependencies.append(dependency)
        return dependencies

    def solve(self, vector: Mapping[int, Fraction]) -> SparseVector | None:
        """Expresses ``vector`` as a combination of the inputs.

        The solution is the deterministic one read off the echelon rows: it
        only uses inputs that contributed pivots. Returns None when the
        vector is outside the span.
        """
        residual = clean(vector)
        solution: SparseVector = {}
        for pivot in [p for p in residual if p in self._rows]:
            factor = residual[pivot]
            axpy(residual, -factor, self._rows[pivot])
            axpy(solution, factor, self._combos[pivot])
        if residual:
            return None
        return solution


def rank(vectors: Iterable[Mapping[int, Fraction]]) -> int:
    """Rank of a family of sparse vectors."""
    basis = EchelonBasis()
    basis.extend(vectors)
    return basis.rank


def kernel(vectors: list[Mapping[int, Fraction]]) -> list[SparseVector]:
    """Basis of the relations ``c`` with ``sum(c[j] * vectors[j]) == 0``."""
    basis = EchelonBasis()
    return basis.extend(vectors)
