"""Tests for Chevalley-Eilenberg cohomology, cup and Massey products and extension obstructions."""

import itertools
from fractions import Fraction

import pytest
from pytest_mock import MockerFixture

from core.cohomology import (
    CochainComplex,
    LieHomomorphism,
    betti,
    cochain_complex,
    cup,
    cup_dual_to_bracket,
    cup_tensor,
    d_squared_vanishes,
    degree_one_class,
    dual_class,
    extension_lift_obstruction,
    h1_basis,
    make_class,
    massey,
    massey_sweep,
    pairing_kernel,
    pairing_nondegenerate,
    wedge,
)
from core.nilpotent import GradedQuotient, LiePresentation, nilpotent_quotient
from lie.enums import MasseyStatus
from lie.exceptions import CapExceededError, CupDataError, ExpressionError, MismatchError, NotClosedError, NotHomomorphismError

F = Fraction


@pytest.fixture
def h3(heisenberg: LiePresentation) -> GradedQuotient:
    return nilpotent_quotient(heisenberg)


@pytest.fixture
def plane(abelian: LiePresentation) -> GradedQuotient:
    return nilpotent_quotient(abelian)


class TestComplex:
    def test_wedge_signs(self) -> None:
        assert wedge({(1,): F(1)}, {(0,): F(1)}) == {(0, 1): F(-1)}
        assert wedge({(0,): F(1)}, {(0,): F(1)}) == {}
        assert wedge({(0, 2): F(2)}, {(1,): F(1)}) == {(0, 1, 2): F(-2)}

    def test_differential_of_heisenberg(self, h3: GradedQuotient) -> None:
        complex_ = cochain_complex(h3)
        assert complex_.d(complex_.dual(2)) == {(0, 1): F(-1)}
        assert complex_.d(complex_.dual(0)) == {}
        assert complex_.render(complex_.d(complex_.dual(2))) == "-x∨∧y∨"

    @pytest.mark.parametrize("name", ["heisenberg", "abelian", "free2", "n5"])
    def test_d_squared_vanishes(self, name: str, request: pytest.FixtureRequest) -> None:
        u = nilpotent_quotient(request.getfixturevalue(name))
        assert d_squared_vanishes(cochain_complex(u))

    def test_solve_coboundary(self, h3: GradedQuotient) -> None:
        complex_ = cochain_complex(h3)
        assert complex_.solve_coboundary({(0, 1): F(1)}) == {(2,): F(-1)}
        assert complex_.solve_coboundary({(0, 2): F(1)}) is None
        assert complex_.solve_coboundary({}) == {}

    def test_component_limit(self, h3: GradedQuotient) -> None:
        with pytest.raises(CapExceededError) as info:
            CochainComplex(h3, component_limit=1).component(1, 1)
        assert info.value.limit_name == "cohomology_component_limit"

    def test_cached_complex_follows_configured_limit(self, h3: GradedQuotient, mocker: MockerFixture) -> None:
        assert len(cochain_complex(h3).component(1, 1)) == 2
        mocker.patch("core.cohomology.complex.get_config", return_value={"limits": {"cohomology_max_dimension": 20, "cohomology_component_limit": 1}})
        with pytest.raises(CapExceededError) as info:
            cochain_complex(h3).component(1, 1)
        assert info.value.limit == 1
        mocker.stopall()
        assert len(cochain_complex(h3).component(1, 1)) == 2


class TestBetti:
    def test_heisenberg(self, h3: GradedQuotient) -> None:
        assert [betti(h3, p).dimension for p in range(4)] == [1, 2, 2, 1]

    def test_abelian(self, plane: GradedQuotient) -> None:
        assert [int(betti(plane, p)) for p in range(3)] == [1, 2, 1]

    def test_graded_components(self, h3: GradedQuotient) -> None:
        assert betti(h3, 2, grade=2).dimension == 0
        group = betti(h3, 2, grade=3)
        assert group.dimension == 2
        assert sorted(c.render() for c in group.basis) == ["x∨∧[x,y]∨", "y∨∧[x,y]∨"]
        assert betti(h3, 2, grade=9).dimension == 0

    def test_euler_characteristic_vanishes(self, free2: LiePresentation) -> None:
        u = nilpotent_quotient(free2)
        assert sum((-1) ** p * betti(u, p).dimension for p in range(u.dimension + 1)) == 0

    def test_dimension_cap(self, h3: GradedQuotient, mocker: MockerFixture) -> None:
        mocker.patch("core.cohomology.complex.get_config", return_value={"limits": {"cohomology_max_dimension": 2, "cohomology_component_limit": 5000}})
        with pytest.raises(CapExceededError) as info:
            betti(h3, 1)
        assert info.value.limit_name == "cohomology_max_dimension"


class TestClasses:
    def test_h1_basis(self, h3: GradedQuotient) -> None:
        assert [c.render() for c in h1_basis(h3)] == ["x∨", "y∨"]

    def test_make_class_rejects_non_cocycles(self, h3: GradedQuotient) -> None:
        with pytest.raises(NotClosedError):
            dual_class(h3, 2)
        with pytest.raises(MismatchError):
            make_class(h3, {(0,): F(1), (0, 1): F(1)})

    def test_degree_one_class(self, h3: GradedQuotient) -> None:
        x, y = h3.algebra.generator("x"), h3.algebra.generator("y")
        assert degree_one_class(h3, x + y * 2).representative == {(0,): F(1), (1,): F(2)}
        with pytest.raises(ExpressionError):
            degree_one_class(h3, x.bracket(y))

    def test_class_arithmetic(self, h3: GradedQuotient) -> None:
        x, y = dual_class(h3, 0), dual_class(h3, 1)
        assert (x + y) - y == x
        assert x * 0 == x - x
        assert x != y
        assert hash(x + y - y) == hash(x)


class TestCup:
    def test_heisenberg_cup_vanishes(self, h3: GradedQuotient) -> None:
        x, y = dual_class(h3, 0), dual_class(h3, 1)
        assert cup(h3, x, y).is_zero()
        tensor = cup_tensor(h3)
        assert tensor.h2 == []
        assert tensor.values == [[[], []], [[], []]]
        assert not pairing_nondegenerate(tensor.values)

    def test_abelian_cup(self, plane: GradedQuotient) -> None:
        x, y = dual_class(plane, 0), dual_class(plane, 1)
        assert not cup(plane, x, y).is_zero()
        assert cup(plane, x, y) == -cup(plane, y, x)
        tensor = cup_tensor(plane)
        assert len(tensor.h2) == 1
        assert tensor.values[0][1] == [-v for v in tensor.values[1][0]] != [0]
        assert pairing_nondegenerate(tensor.values)

    def test_cup_needs_degree_one(self, plane: GradedQuotient) -> None:
        x, y = dual_class(plane, 0), dual_class(plane, 1)
        with pytest.raises(MismatchError):
            cup(plane, cup(plane, x, y), x)

    def test_genus_two_symplectic_pairing(self, genus2: LiePresentation) -> None:
        u = nilpotent_quotient(genus2.with_class_cap(2))
        tensor = cup_tensor(u)
        assert tensor.h1 == ["a1∨", "b1∨", "a2∨", "b2∨"]
        assert len(tensor.h2) == 1
        assert tensor.values[0][1] == tensor.values[2][3] != [0]
        assert tensor.values[0][2] == [0]
        assert pairing_nondegenerate(tensor.values)

    @pytest.mark.parametrize("name", ["heisenberg", "abelian", "free2", "n5"])
    def test_cup_dual_to_bracket(self, name: str, request: pytest.FixtureRequest) -> None:
        assert cup_dual_to_bracket(nilpotent_quotient(request.getfixturevalue(name)))

    def test_pairing_kernel_validates(self) -> None:
        assert pairing_kernel([[[0], [1]], [[-1], [0]]]) == []
        assert pairing_kernel([[[0], [0]], [[0], [0]]]) != []
        with pytest.raises(CupDataError, match="antisymmetric"):
            pairing_kernel([[[1]]])
        with pytest.raises(CupDataError):
            pairing_kernel([[[0], [1]]])


class TestMassey:
    def test_heisenberg_triple(self, h3: GradedQuotient) -> None:
        x, y = dual_class(h3, 0), dual_class(h3, 1)
        result = massey(h3, x, x, y)
        assert result.status is MasseyStatus.NONVANISHING
        assert result.representative is not None
        assert result.representative.render() == "x∨∧[x,y]∨"
        assert result.defining == ({}, {(2,): F(1)})
        assert result.render() == "nonvanishing: x∨∧[x,y]∨"

    def test_vanishing_and_undefined(self, h3: GradedQuotient, plane: GradedQuotient) -> None:
        x = dual_class(h3, 0)
        assert massey(h3, x, x, x).status is MasseyStatus.VANISHING
        a, b = dual_class(plane, 0), dual_class(plane, 1)
        undefined = massey(plane, a, b, a)
        assert undefined.status is MasseyStatus.UNDEFINED
        assert not undefined.defined
        assert undefined.render() == "undefined"

    def test_zero_argument(self, h3: GradedQuotient, plane: GradedQuotient) -> None:
        x, y = dual_class(h3, 0), dual_class(h3, 1)
        assert massey(h3, x * 0, y, y).status is MasseyStatus.VANISHING
        a, b = dual_class(plane, 0), dual_class(plane, 1)
        assert massey(plane, a * 0, a, b).status is MasseyStatus.UNDEFINED

    def test_independent_of_defining_system(self, h3: GradedQuotient) -> None:
        basis = h1_basis(h3)
        for i, j, k in itertools.product(range(len(basis)), repeat=3):
            forward = massey(h3, basis[i], basis[j], basis[k])
            backward = massey(h3, basis[i], basis[j], basis[k], reverse_solver=True)
            assert forward.status is backward.status

    def test_sweep(self, h3: GradedQuotient, plane: GradedQuotient) -> None:
        first = massey_sweep(h3)
        assert len(first) == 1
        assert first[0].indices == (0, 0, 1)
        assert first[0].classes == ("x∨", "x∨", "y∨")
        assert len(massey_sweep(h3, stop_at_first=False)) > 1
        assert massey_sweep(plane) == []


class TestExtensions:
    def test_identity_of_plane_does_not_lift(self, plane: GradedQuotient) -> None:
        phi = LieHomomorphism.from_generator_images(plane, plane, [plane.basis_element(0), plane.basis_element(1)])
        result = extension_lift_obstruction(plane, [{(0, 1): F(1)}], phi)
        assert not result.vanishes
        assert result.lift is None
        assert not result.classes[0].is_zero()

    def test_projection_from_heisenberg_lifts(self, h3: GradedQuotient, plane: GradedQuotient) -> None:
        phi = LieHomomorphism.from_generator_images(h3, plane, [plane.basis_element(0), plane.basis_element(1)])
        result = extension_lift_obstruction(h3, [{(0, 1): F(1)}], phi)
        assert result.vanishes
        assert result.lift == [{(2,): F(1)}]

    def test_non_homomorphism(self, h3: GradedQuotient, plane: GradedQuotient) -> None:
        with pytest.raises(NotHomomorphismError):
            LieHomomorphism.from_generator_images(plane, h3, [h3.basis_element(0), h3.basis_element(1)])
        with pytest.raises(MismatchError):
            LieHomomorphism.from_generator_images(plane, h3, [h3.basis_element(0)])

    def test_cocycle_must_be_closed(self, free2: LiePresentation) -> None:
        u = nilpotent_quotient(free2).truncate(3)
        assert u.label(3) == "[x,[x,y]]"
        phi = LieHomomorphism.from_generator_images(u, u, [u.basis_element(0), u.basis_element(1)])
        with pytest.raises(NotClosedError):
            extension_lift_obstruction(u, [{(1, 3): F(1)}], phi)

    def test_source_must_match(self, h3: GradedQuotient, plane: GradedQuotient) -> None:
        phi = LieHomomorphism.from_generator_images(h3, plane, [plane.basis_element(0), plane.basis_element(1)])
        with pytest.raises(MismatchError):
            extension_lift_obstruction(plane, [{(0, 1): F(1)}], phi)
