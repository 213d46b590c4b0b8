"""
Tests for exact q-expansion arithmetic
"""
from fractions import Fraction

import pytest

from src.exactseries import (
    Grid,
    QExpansion,
    as_half,
    eta_product,
    eta_shift,
    euler_power,
    from_json,
    mul,
    normalize_grid,
    render,
    rescale_variable,
    sigma,
    sigma_odd,
    sigma_power,
    to_json,
    translation_sign_action,
    truncate,
)
from src.utils.errors import GridError, NonRealMultiplier, PrefactorNotOnGrid


class TestQExpansion:
    """Construction invariants and ring operations"""

    def test_zeros_and_out_of_range_keys_are_dropped(self):
        f = QExpansion(Grid.INTEGER, 6, {0: 1, 2: 0, 4: 3, 6: 5, 8: 1})
        assert f.coeffs == {0: 1, 4: 3}
        assert f.precision == 6

    def test_odd_key_on_integer_grid_is_rejected(self):
        with pytest.raises(GridError):
            QExpansion(Grid.INTEGER, 10, {3: 1})

    def test_negative_key_is_rejected(self):
        with pytest.raises(GridError):
            QExpansion(Grid.HALF, 10, {-1: 1})

    def test_precision_must_be_positive(self):
        with pytest.raises(ValueError):
            QExpansion(Grid.INTEGER, 0)

    def test_addition_truncates_to_smaller_precision(self):
        a = QExpansion(Grid.INTEGER, 10, {0: 1, 8: 2})
        b = QExpansion(Grid.INTEGER, 6, {2: 1})
        total = a + b
        assert total.precision == 6
        assert total.coeffs == {0: 1, 2: 1}

    def test_subtraction_to_zero(self):
        f = QExpansion(Grid.HALF, 9, {1: Fraction(1, 3), 5: -2})
        assert (f - f).is_zero()

    def test_mixed_grids_do_not_add(self):
        with pytest.raises(GridError):
            QExpansion(Grid.INTEGER, 4, {0: 1}) + QExpansion(Grid.HALF, 4, {1: 1})

    def test_product_of_one_plus_q_and_one_minus_q(self):
        a = QExpansion(Grid.INTEGER, 10, {0: 1, 2: 1})
        b = QExpansion(Grid.INTEGER, 10, {0: 1, 2: -1})
        assert mul(a, b).coeffs == {0: 1, 4: -1}

    def test_half_times_half_lands_on_integer_grid(self):
        root = QExpansion(Grid.HALF, 9, {1: 1})
        square = mul(root, root)
        assert square.grid is Grid.INTEGER
        assert square.coeffs == {2: 1}

    def test_scalar_multiplication(self):
        f = QExpansion(Grid.INTEGER, 6, {2: 3})
        assert (Fraction(1, 3) * f).coeffs == {2: 1}
        assert (f * 2).coeffs == {2: 6}

    def test_coefficient_accepts_half_integers(self):
        f = QExpansion(Grid.HALF, 9, {3: 7})
        assert f.coefficient(Fraction(3, 2)) == 7
        assert f.coefficient(2) == 0

    def test_truncate_and_grid_relabeling(self):
        f = QExpansion(Grid.INTEGER, 10, {0: 1, 4: 2, 8: 3})
        assert truncate(f, 6).coeffs == {0: 1, 4: 2}
        half = as_half(f)
        assert half.grid is Grid.HALF
        assert normalize_grid(half) == f


class TestSubstitutions:
    """q -> q^d and tau -> tau + t"""

    def test_rescale_half_grid_by_two(self):
        f = QExpansion(Grid.HALF, 7, {1: 1, 3: -12, 5: 54})
        g = rescale_variable(f, 2)
        assert g.grid is Grid.INTEGER
        assert g.precision == 14
        assert g.coeffs == {2: 1, 6: -12, 10: 54}

    def test_rescale_respects_cap(self):
        f = QExpansion(Grid.INTEGER, 10, {2: 1})
        assert rescale_variable(f, 3, cap=12).precision == 12

    def test_half_translation_negates_odd_powers(self):
        f = QExpansion(Grid.INTEGER, 12, {2: 1, 4: 5, 6: -2})
        shifted = translation_sign_action(f, Fraction(1, 2))
        assert shifted.coeffs == {2: -1, 4: 5, 6: 2}

    def test_unit_translation_on_half_grid(self):
        f = QExpansion(Grid.HALF, 8, {1: 1, 2: 4, 3: -12})
        assert translation_sign_action(f, 1).coeffs == {1: -1, 2: 4, 3: 12}

    def test_non_real_multiplier_is_rejected(self):
        f = QExpansion(Grid.HALF, 8, {1: 1})
        with pytest.raises(NonRealMultiplier):
            translation_sign_action(f, Fraction(1, 2))


class TestRendering:
    def test_integer_rendering(self):
        f = QExpansion(Grid.INTEGER, 8, {2: 1, 6: -12})
        assert render(f) == "q - 12q^3 + O(q^4)"

    def test_half_rendering(self):
        f = QExpansion(Grid.HALF, 5, {1: 1, 3: -12})
        assert render(f) == "q^(1/2) - 12q^(3/2) + O(q^(5/2))"

    def test_zero_rendering(self):
        assert render(QExpansion(Grid.INTEGER, 4)) == "O(q^2)"

    def test_json_preserves_rationals(self):
        f = QExpansion(Grid.HALF, 9, {1: Fraction(-3, 7), 4: 2})
        data = to_json(f)
        assert data["coeffs"] == {"1": "-3/7", "4": "2/1"}
        assert from_json(data) == f

    def test_malformed_json(self):
        with pytest.raises(ValueError):
            from_json({"grid": "int", "coeffs": {}})


class TestArithmetic:
    def test_divisor_sums(self):
        assert sigma(6) == 12
        assert sigma_power(4, 3) == 73
        assert sigma_odd(12) == 4

    def test_divisor_sums_need_positive_input(self):
        with pytest.raises(ValueError):
            sigma(0)


class TestEtaProducts:
    """Euler products and eta quotients"""

    def test_pentagonal_numbers(self):
        assert euler_power(1, 10) == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0]

    def test_inverse_product_counts_partitions(self):
        assert euler_power(-1, 8) == [1, 1, 2, 3, 5, 7, 11, 15]

    def test_zero_exponent(self):
        assert euler_power(0, 4) == [1, 0, 0, 0]

    def test_discriminant(self):
        delta = eta_product([(1, 24)], 12)
        assert delta.grid is Grid.INTEGER
        assert delta.coeffs == {2: 1, 4: -24, 6: 252, 8: -1472, 10: 4830}

    def test_weight6_level4_newform(self, golden_weight6):
        assert eta_product([(2, 12)], 28) == golden_weight6

    def test_eta12_lives_on_half_grid(self):
        f = eta_product([(1, 12)], 8)
        assert f.grid is Grid.HALF
        assert f.coeffs == {1: 1, 3: -12, 5: 54, 7: -88}

    def test_level2_weight8_newform(self):
        f = eta_product([(1, 8), (2, 8)], 8)
        assert [f.coefficient(n) for n in (1, 2, 3)] == [1, -8, 12]

    def test_prefactor_off_grid(self):
        assert eta_shift([(1, 12)]) == 1
        with pytest.raises(PrefactorNotOnGrid):
            eta_shift([(1, 1)])

    def test_long_expansion_matches_short_one(self):
        short = eta_product([(2, 12)], 200)
        long = eta_product([(2, 12)], 2000)
        assert truncate(long, 200) == short
        # a_15 = a_3 a_5
        assert long.coefficient(15) == -648
