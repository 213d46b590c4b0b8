"""
Tests for generator series, echelon bases and dimensions
"""
from fractions import Fraction

import pytest

from sympy import Matrix, Rational

from src.exactseries import Grid, QExpansion, as_half, mul, truncate
from src.generators import (
    CharacterLabel,
    FormSpace,
    GroupLabel,
    SpaceKind,
    basis_M,
    basis_S,
    basis_S_chi,
    build_space,
    coordinates,
    delta_series,
    dimension_M,
    dimension_S,
    dimension_S_chi,
    echelon,
    eisenstein,
    reduce_rows,
    reexpand,
    resolve_precision,
    span_equal,
    sturm_bound,
    theta_series,
    x2_series,
)
from src.utils.errors import InsufficientPrecision, OddWeight, UnsupportedWeight


class TestGeneratorSeries:
    def test_eisenstein_coefficients(self):
        assert [eisenstein(4, 8)[m] for m in (0, 2, 4, 6)] == [1, 240, 2160, 6720]
        assert [eisenstein(6, 6)[m] for m in (0, 2, 4)] == [1, -504, -16632]

    def test_unknown_eisenstein_weight(self):
        with pytest.raises(UnsupportedWeight):
            eisenstein(8, 10)

    def test_discriminant_from_eisenstein_series(self):
        e4, e6 = eisenstein(4, 40), eisenstein(6, 40)
        cube = mul(mul(e4, e4), e4)
        square = mul(e6, e6)
        assert Fraction(1, 1728) * (cube - square) == delta_series(40)

    def test_theta_squares(self):
        assert theta_series(20).coeffs == {0: 1, 2: 2, 8: 2, 18: 2}

    def test_level2_weight2_generator(self):
        # 1 + 24 sum over n of the odd divisor sum of n
        assert [x2_series(10)[2 * n] for n in range(5)] == [1, 24, 24, 96, 24]


class TestEchelon:
    def test_reduced_form_is_canonical(self):
        a = QExpansion(Grid.INTEGER, 10, {2: 2, 4: 4})
        b = QExpansion(Grid.INTEGER, 10, {2: 1, 6: 1})
        basis = echelon([a, b])
        assert [f.coeffs for f in basis] == [{2: 1, 6: 1}, {4: 1, 6: Fraction(-1, 2)}]
        assert span_equal(basis, echelon([b, a + b]))

    def test_dependent_rows_are_dropped(self):
        a = QExpansion(Grid.INTEGER, 10, {0: 1, 2: 1})
        assert len(echelon([a, 3 * a])) == 1

    def test_coordinates_and_membership(self):
        a = QExpansion(Grid.INTEGER, 10, {2: 1, 4: 1})
        b = QExpansion(Grid.INTEGER, 10, {6: 1})
        basis = echelon([a, b])
        assert coordinates(basis, 2 * a - b) == [2, -1]
        assert coordinates(basis, QExpansion(Grid.INTEGER, 10, {8: 1})) is None

    def test_reduce_rows_matches_sympy_rref(self):
        keys = [1, 3, 4, 9]
        dense = [
            [Rational(1, 2), 3, 0, -1],
            [1, 6, Rational(2, 3), 0],
            [0, 0, 2, 3],
        ]
        rows = [{m: Fraction(str(v)) for m, v in zip(keys, row) if v} for row in dense]
        expected, pivots = Matrix(dense).rref()
        reduced = reduce_rows(rows)
        assert list(reduced) == [keys[j] for j in pivots]
        for i, pivot in enumerate(reduced):
            assert reduced[pivot] == {m: Fraction(str(expected[i, j])) for j, m in enumerate(keys) if expected[i, j] != 0}

    def test_reduce_rows_of_zero_rows(self):
        assert reduce_rows([{}, {2: Fraction(0)}]) == {}


class TestDimensions:
    """Closed forms and monomial ranks agree"""

    @pytest.mark.parametrize("k", range(0, 26, 2))
    def test_monomial_ranks_match_closed_forms(self, k):
        for group in GroupLabel:
            assert basis_M(group, k).dim == dimension_M(group, k)
            assert basis_S(group, k).dim == dimension_S(group, k)

    def test_known_dimensions(self):
        assert dimension_M(GroupLabel.SL2Z, 12) == 2
        assert dimension_S(GroupLabel.SL2Z, 12) == 1
        assert dimension_S(GroupLabel.GAMMA0_2, 8) == 1
        assert dimension_S(GroupLabel.GAMMA0_4, 6) == 1
        assert dimension_S(GroupLabel.GAMMA0_4, 8) == 2

    def test_chi_dimensions(self):
        dims = [dimension_S_chi(k) for k in range(6, 26, 2)]
        assert dims == [1, 0, 1, 1, 1, 1, 2, 1, 2, 2]

    def test_weight_two_level_one_is_empty(self):
        assert basis_M(GroupLabel.SL2Z, 2).basis == ()

    def test_odd_weight(self):
        with pytest.raises(OddWeight):
            basis_M(GroupLabel.GAMMA0_4, 5)


class TestFormSpaces:
    def test_chi_space_is_eta12(self, chi_space6):
        assert chi_space6.dim == 1
        assert chi_space6.grid is Grid.HALF
        f = chi_space6.basis[0]
        assert [f[m] for m in (1, 3, 5, 7, 9, 11, 13)] == [1, -12, 54, -88, -99, 540, -418]

    def test_chi_space_weight18_is_two_dimensional(self):
        space = basis_S_chi(18)
        assert space.dim == 2
        assert space.pivots == [1, 3]

    def test_cusp_forms_lie_in_modular_forms(self):
        for group in GroupLabel:
            assert basis_M(group, 12).contains_space(basis_S(group, 12))

    def test_sturm_bounds(self):
        assert sturm_bound(GroupLabel.SL2Z, 12) == 22
        assert sturm_bound(GroupLabel.GAMMA0_4, 6) == 26
        assert sturm_bound(GroupLabel.SL2Z, 6, CharacterLabel.CHI) == 23

    def test_precision_below_sturm_bound(self):
        with pytest.raises(InsufficientPrecision):
            resolve_precision(GroupLabel.GAMMA0_4, 6, 10)

    def test_json_round_trip_keeps_kind(self, chi_space6):
        restored = FormSpace.from_json(chi_space6.to_json())
        assert restored == chi_space6
        assert restored.kind is SpaceKind.S
        assert restored.character is CharacterLabel.CHI

    def test_build_space_dispatch(self):
        assert build_space(GroupLabel.SL2Z, 12, SpaceKind.S).basis == basis_S(GroupLabel.SL2Z, 12).basis
        assert build_space(GroupLabel.SL2Z, 6, SpaceKind.S, CharacterLabel.CHI).grid is Grid.HALF

    def test_reexpand_extends_the_same_forms(self):
        space = basis_S(GroupLabel.GAMMA0_4, 10)
        wider = reexpand(space, space.precision + 100)
        assert wider.precision == space.precision + 100
        for f, g in zip(space.basis, wider.basis):
            assert truncate(g, space.precision) == f

    def test_chi_space_times_level1_forms(self, chi_space6):
        product = mul(chi_space6.basis[0], as_half(eisenstein(4, chi_space6.precision)))
        assert product in basis_S_chi(10, chi_space6.precision)
