"""
Tests for numerical evaluation, slash checks and completed L-functions
"""
import random

import mpmath as mp
import pytest

from src.analytic import (
    IDENTITY,
    NumericValue,
    SlashMatrix,
    automorphy_sample,
    default_s_grid,
    envelope,
    eval_series,
    functional_equation_residuals,
    i_power,
    lambda_direct,
    lambda_incomplete_gamma,
    random_automorphy_words,
    sample_points,
    slash_numeric,
    verify_chi_automorphy,
    verify_corollary_1_4,
    verify_fricke,
    verify_involution_conjugation,
    verify_prime_level_fricke,
)
from src.config import Config
from src.exactseries import Grid, QExpansion
from src.generators import delta_series, reexpand
from src.sl2words import S, T, Mat2
from src.utils.errors import (
    GridError,
    InsufficientPrecision,
    NotInUpperHalfPlane,
    OutsideConvergenceRegion,
    SingularMatrix,
)


@pytest.fixture(scope="module")
def delta():
    return delta_series(200)


class TestEvaluation:
    def test_zero_series(self):
        value = eval_series(QExpansion(Grid.INTEGER, 10), 1j, 12)
        assert value == NumericValue(0j, 0.0, 0.0)

    def test_discriminant_at_i(self, delta):
        expected = mp.gamma(mp.mpf(1) / 4) ** 24 / (mp.mpf(2) ** 24 * mp.pi ** 18)
        value = eval_series(delta, 1j, 12)
        assert abs(value.value - complex(expected)) < 1e-12 * abs(complex(expected))
        assert abs(value.value.imag) < 1e-15

    def test_more_terms_agree(self, delta):
        short = eval_series(delta, 0.1 + 0.9j, 12, terms=50)
        long = eval_series(delta, 0.1 + 0.9j, 12, terms=200)
        assert abs(short.value - long.value) < 1e-10
        assert long.abs_error <= short.abs_error

    def test_tail_bound_covers_truncation(self, delta):
        short = eval_series(delta, 0.4j, 12, terms=30)
        long = eval_series(delta, 0.4j, 12)
        assert abs(short.value - long.value) <= short.abs_error

    def test_integer_grid_is_periodic(self, delta):
        tau = 0.2 + 0.7j
        assert abs(eval_series(delta, tau, 12).value - eval_series(delta, tau + 1, 12).value) < 1e-14

    def test_half_grid_changes_sign_under_translation(self, chi_space6):
        f = chi_space6.basis[0]
        tau = 0.2 + 0.7j
        here = eval_series(f, tau, 6).value
        there = eval_series(f, tau + 1, 6).value
        assert abs(here + there) < 1e-12 * abs(here)

    def test_lower_half_plane(self, delta):
        with pytest.raises(NotInUpperHalfPlane):
            eval_series(delta, -1j, 12)

    def test_terms_beyond_precision(self, delta):
        with pytest.raises(InsufficientPrecision):
            eval_series(delta, 1j, 12, terms=500)

    def test_envelope(self, delta):
        assert envelope(QExpansion(Grid.INTEGER, 10), 12) == 0.0
        assert envelope(delta, 12) >= 1.0


class TestSlash:
    def test_identity(self, delta):
        tau = 0.3 + 0.8j
        value = eval_series(delta, tau, 12).value
        assert abs(slash_numeric(delta, 12, IDENTITY, tau).value - value) < 1e-15 * abs(value)

    def test_composition(self, delta):
        tau = 0.1 + 1.1j
        st = SlashMatrix.from_mat2(S) @ SlashMatrix.from_mat2(T)
        nested = slash_numeric(delta, 12, S, tau + 1)
        direct = slash_numeric(delta, 12, st, tau)
        assert abs(nested.value - direct.value) < 1e-12 * abs(direct.value)

    def test_discriminant_is_level_one(self, delta):
        tau = 0.1 + 1.1j
        image = slash_numeric(delta, 12, Mat2(2, 1, 1, 1), tau)
        value = eval_series(delta, tau, 12)
        assert abs(image.value - value.value) < 1e-10 * abs(value.value)

    def test_singular_matrix(self):
        with pytest.raises(SingularMatrix):
            SlashMatrix(1, 2, 2, 4)

    def test_sample_points(self):
        points = sample_points(7, 4, 4)
        assert points[0] == 0.5j
        assert points == sample_points(7, 4, 4)
        assert all(p.imag > 0.35 for p in points)

    def test_automorphy_samples(self):
        assert automorphy_sample(Mat2(2, 1, 1, 1)) == complex(-1, 1)
        assert automorphy_sample(T) == complex(0.25, 0.8)
        words = random_automorphy_words(random.Random(1), 5)
        assert len(words) == 5
        assert all(abs(m.c) <= 12 for _, m in words)


class TestFrickeChecks:
    def test_weight6(self):
        report = verify_fricke(6)
        assert report.passed, report.residuals
        assert report.control["residual"] > 1e-2
        assert report.envelope_A > 0

    def test_explicit_samples(self):
        report = verify_fricke(6, tau_samples=[0.5j, 0.1 + 0.45j, 0.45 + 0.45j])
        assert report.passed
        assert len(report.samples) == 3

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [10, 12])
    def test_higher_weights(self, k):
        assert verify_fricke(k).passed

    def test_chi_automorphy_default_words(self):
        report = verify_chi_automorphy(6)
        assert report.passed, report.residuals
        assert report.parameters["words"][:2] == ["S", "T"]

    def test_chi_automorphy_given_words(self):
        report = verify_chi_automorphy(6, words=["T", "I"])
        assert report.passed
        assert len(report.residuals) == 2
        assert report.control is not None

    def test_involution_conjugation(self):
        report = verify_involution_conjugation(6)
        assert report.passed, report.residuals
        assert report.details["exact_translation"]
        assert (report.details["chi_S"], report.details["chi_T"]) == (-1, -1)

    def test_prime_level_fricke(self):
        report = verify_prime_level_fricke(8)
        assert report.passed, report.residuals
        assert report.details["signs"] == {"f0": "1"}

    def test_report_is_deterministic(self):
        assert verify_fricke(6, seed=9).to_json() == verify_fricke(6, seed=9).to_json()


class TestLFunction:
    def test_i_power(self):
        assert [i_power(k) for k in (2, 4, 6, 8)] == [-1, 1, -1, 1]

    def test_direct_sum_needs_convergence(self, newform6):
        with pytest.raises(OutsideConvergenceRegion):
            lambda_direct(newform6, 6, 4)

    def test_half_grid_is_rejected(self, chi_space6):
        with pytest.raises(GridError):
            lambda_incomplete_gamma(chi_space6.basis[0], 6, 3)

    def test_bad_sign(self, newform6):
        with pytest.raises(ValueError):
            lambda_incomplete_gamma(newform6, 6, 3, eps=0)

    def test_direct_sum_is_real_and_converges(self, newspace6):
        g = reexpand(newspace6, 2000).basis[0]
        coarse = lambda_direct(g, 6, 8, terms=1000)
        fine = lambda_direct(g, 6, 8, terms=2000)
        assert abs(fine.value.imag) < 1e-20
        assert abs(coarse.value - fine.value) < 1e-9 * abs(fine.value)

    def test_both_formulas_agree_far_right(self, newspace6):
        g = reexpand(newspace6, 2000).basis[0]
        direct = lambda_direct(g, 6, 8)
        gamma_side = lambda_incomplete_gamma(newspace6.basis[0], 6, 8)
        assert abs(direct.value - gamma_side.value) < 1e-10 * abs(gamma_side.value)

    def test_functional_equation_center(self, newform6):
        rows = functional_equation_residuals(newform6, 6, default_s_grid(6))
        assert [s for s, *_ in rows] == [2, 3, 4, complex(3, 2)]
        assert rows[1][3] == 0.0
        assert all(residual < 1e-8 for *_, residual in rows)

    def test_wrong_sign_breaks_the_equation(self, newform6):
        rows = functional_equation_residuals(newform6, 6, [2], eps=1)
        assert rows[0][3] > 1e-3

    def test_corollary_1_4(self):
        report = verify_corollary_1_4(6)
        assert report.passed, report.residuals
        assert report.control["residual"] > 1e-3

    def test_anchor_sits_two_right_of_the_center(self):
        report = verify_corollary_1_4(6)
        (anchor,) = report.details["anchors"]
        assert anchor["s"] == "5.000000+0.000000i"
        assert anchor["difference"] < 1e-8
        assert report.parameters["anchor_terms"] == Config.ANCHOR_TERMS

    def test_anchor_can_be_moved(self):
        report = verify_corollary_1_4(6, anchor=8, anchor_terms=2000)
        assert report.passed, report.residuals
        assert report.details["anchors"][0]["s"] == "8.000000+0.000000i"

    def test_empty_newspace_passes(self):
        report = verify_corollary_1_4(8)
        assert report.passed
        assert report.residuals == []

