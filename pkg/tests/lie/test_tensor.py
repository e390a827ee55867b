"""Tests for the truncated free associative algebra and the Lie <-> associative maps."""

from fractions import Fraction

import pytest

from lie.exceptions import ConsistencyError
from lie.free_lie import FreeLieAlgebra, Generator
from lie.linalg import EchelonBasis
from lie.tensor import add, commutator, exp, from_associative, log, multiply, to_associative
from lie.words import witt_dim

F = Fraction


@pytest.fixture
def algebra() -> FreeLieAlgebra:
    return FreeLieAlgebra([Generator("x"), Generator("y")], 5)


def test_multiply_truncates() -> None:
    a = {(0,): F(1), (0, 1): F(2)}
    b = {(1,): F(1)}
    assert multiply(a, b, 2) == {(0, 1): F(1)}
    assert multiply(a, b, 3) == {(0, 1): F(1), (0, 1, 1): F(2)}


def test_commutator_and_add() -> None:
    assert commutator({(0,): F(1)}, {(1,): F(1)}, 2) == {(0, 1): F(1), (1, 0): F(-1)}
    assert add({(0,): F(1)}, {(0,): F(1)}, -1) == {}


def test_exp_log_are_inverse() -> None:
    a = {(0,): F(1), (1,): F(1, 2), (0, 1): F(-3)}
    assert log(exp(a, 4), 4) == a


def test_exp_and_log_preconditions() -> None:
    with pytest.raises(ValueError):
        exp({(): F(1)}, 3)
    with pytest.raises(ValueError):
        log({(0,): F(1)}, 3)


def test_to_associative_bracket(algebra: FreeLieAlgebra) -> None:
    x, y = algebra.generator("x"), algebra.generator("y")
    assert to_associative(x.bracket(y)) == {(0, 1): F(1), (1, 0): F(-1)}
    expansion = to_associative(x.bracket(x.bracket(y)))
    assert expansion == {(0, 0, 1): F(1), (0, 1, 0): F(-2), (1, 0, 0): F(1)}


def test_from_associative_inverts_expansion(algebra: FreeLieAlgebra) -> None:
    x, y = algebra.generator("x"), algebra.generator("y")
    element = x - y * F(2, 3) + x.bracket(y) * F(1, 2) + y.bracket(x.bracket(x.bracket(y))) * 5
    assert from_associative(to_associative(element), algebra) == element


@pytest.mark.parametrize("polynomial", [{(0, 0): F(1)}, {(1, 0): F(1)}, {(): F(1)}, {(0, 1): F(1)}])
def test_from_associative_rejects_non_lie(algebra: FreeLieAlgebra, polynomial: dict[tuple[int, ...], Fraction]) -> None:
    with pytest.raises(ConsistencyError):
        from_associative(polynomial, algebra)


@pytest.mark.parametrize("degree", [1, 2, 3, 4, 5, 6])
def test_bracketing_span_matches_witt_dimension(degree: int) -> None:
    """Brute force: the span of all bracketings of generators inside the associative algebra."""
    spans: dict[int, list[dict[tuple[int, ...], Fraction]]] = {1: [{(0,): F(1)}, {(1,): F(1)}]}
    for n in range(2, degree + 1):
        candidates = [commutator(p, q, n) for i in range(1, n) for p in spans[i] for q in spans[n - i]]
        columns: dict[tuple[int, ...], int] = {}
        basis = EchelonBasis()
        kept = []
        for polynomial in candidates:
            vector = {columns.setdefault(w, len(columns)): c for w, c in polynomial.items()}
            if basis.add(vector) is None:
                kept.append(polynomial)
        spans[n] = kept
    assert len(spans[degree]) == witt_dim(2, degree)
