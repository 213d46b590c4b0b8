"""
Tests for Hecke operators, the old/new splitting and eigenforms
"""
from fractions import Fraction

import pytest

from src.exactseries import truncate
from src.generators import GroupLabel, SpaceKind, basis_S, delta_series
from src.heckeforms import (
    OperatorLabel,
    apply_Tp,
    apply_translation_half,
    apply_U2,
    apply_Up,
    charpoly,
    extract_rational_eigenforms,
    hecke_decomposition,
    newspace_level4,
    oldspace_level4,
    operator_matrix,
    separating_operators,
    verify_lemma_1_1,
    verify_lemma_3_1,
    verify_structure,
    verify_theorem_1_2,
)
from src.utils.errors import NotInvariant, PrimeDividesLevel

WEIGHTS = [6, 8, 10, 12, 14] + [pytest.param(k, marks=pytest.mark.slow) for k in (16, 18, 20, 22, 24)]


class TestOperators:
    def test_T3_eigenvalue_of_discriminant(self):
        delta = delta_series(60)
        image = apply_Tp(delta, 12, 3, 1)
        assert image == truncate(252 * delta, image.precision)

    def test_T2_at_level_four_is_rejected(self, newform6):
        with pytest.raises(PrimeDividesLevel):
            apply_Tp(newform6, 6, 2, 4)

    def test_Tp_shrinks_precision(self, newform6):
        assert apply_Tp(newform6, 6, 5, 4).precision == newform6.precision // 5

    def test_U2_reads_even_coefficients(self):
        delta = delta_series(40)
        assert apply_Up(delta, 2)[2] == -24

    def test_labels(self):
        assert str(OperatorLabel("T", ((3, 1), (5, 2)))) == "T3 + 2*T5"
        assert [str(label) for label in separating_operators(3)] == ["T3", "T3 + T5", "T3 + 2*T5"]

    def test_V2_leaves_the_level_four_space(self, newspace6):
        with pytest.raises(NotInvariant):
            operator_matrix(newspace6, OperatorLabel.V(2))

    def test_T3_and_T5_commute(self):
        ambient = basis_S(GroupLabel.GAMMA0_4, 12)
        t3 = operator_matrix(ambient, OperatorLabel.T(3)).matrix
        t5 = operator_matrix(ambient, OperatorLabel.T(5)).matrix
        assert t3 * t5 == t5 * t3

    def test_charpoly_of_empty_matrix(self):
        ambient = basis_S(GroupLabel.SL2Z, 14)
        assert charpoly(operator_matrix(ambient, OperatorLabel.T(3)).matrix).degree() == 0


class TestNewspace:
    """The level-4 newspace and its distinguishing properties"""

    def test_golden_weight6_newform(self, newspace6, golden_weight6):
        assert newspace6.dim == 1
        assert newspace6.kind is SpaceKind.SNEW
        assert truncate(newspace6.basis[0], golden_weight6.precision) == golden_weight6

    def test_newspace_dimensions(self):
        dims = [newspace_level4(k).dim for k in range(6, 26, 2)]
        assert dims == [1, 0, 1, 1, 1, 1, 2, 1, 2, 2]

    def test_weight8_is_entirely_old(self):
        assert oldspace_level4(8).dim == 2
        assert newspace_level4(8).dim == 0

    def test_U2_kills_and_half_translation_negates(self, newform6):
        assert apply_U2(newform6, 6).is_zero()
        assert apply_translation_half(newform6) == -newform6

    def test_separating_operator_is_recorded(self):
        labels = [str(label) for label in separating_operators()]
        assert newspace_level4(12).meta["separating_operator"] in labels


class TestEigenforms:
    def test_weight6_hecke_relations(self, newspace6):
        (eigenform,) = extract_rational_eigenforms(newspace6)
        assert eigenform.a(3) == -12
        assert eigenform.a(9) == eigenform.a(3) ** 2 - 3 ** 5 == -99
        assert eigenform.a(15) == eigenform.a(3) * eigenform.a(5) == -648
        assert eigenform.a2 == 0
        assert eigenform.eigenvalues[5] == 54

    def test_level2_weight8_newform(self, level2_newspace8):
        (eigenform,) = extract_rational_eigenforms(level2_newspace8)
        assert eigenform.a2 == -8
        assert eigenform.a(3) == 12
        # Fricke sign -2^{1-k/2} a_2
        assert Fraction(-eigenform.a2, 2 ** 3) == 1

    def test_level1_eigenforms_at_weight24(self):
        eigenforms, descriptors = hecke_decomposition(basis_S(GroupLabel.SL2Z, 24))
        # the two weight-24 eigenforms have conjugate irrational eigenvalues
        assert eigenforms == []
        assert descriptors[0].dimension == 2

    def test_descriptor_serialization(self):
        _, descriptors = hecke_decomposition(basis_S(GroupLabel.SL2Z, 24))
        data = descriptors[0].to_dict()
        assert data["operator"] == "T3"
        assert "x**2" in data["minimal_polynomial"]


class TestReports:
    @pytest.mark.parametrize("k", WEIGHTS)
    def test_theorem_1_2(self, k):
        report = verify_theorem_1_2(k)
        assert report.passed, report.details
        assert report.details["spans_equal"]

    @pytest.mark.parametrize("k", WEIGHTS)
    def test_lemma_3_1(self, k):
        report = verify_lemma_3_1(k)
        assert report.passed, report.details

    def test_lemma_3_1_excludes_odd_supported_old_vector(self):
        controls = verify_lemma_3_1(8).details["old_controls"]
        assert controls
        assert all(c["odd_supported"] and c["excluded"] for c in controls)

    @pytest.mark.parametrize("k", [6, 10, 12])
    def test_lemma_1_1(self, k):
        assert verify_lemma_1_1(k).passed

    def test_lemma_1_1_at_prime_level(self):
        report = verify_lemma_1_1(8, GroupLabel.GAMMA0_2)
        assert report.passed
        assert report.details["eigenforms"][0]["eigenform"]["a2"] == "-8"

    @pytest.mark.parametrize("k", [6, 12, 18])
    def test_structure(self, k):
        report = verify_structure(k)
        assert report.passed, report.details

    def test_report_json_uses_pass_key(self):
        data = verify_theorem_1_2(6).to_dict()
        assert data["pass"] is True
        assert data["check"] == "theorem-1-2"
