"""
Tests for S/T words, characters and the Gamma0(4) decomposition
"""
import random

import pytest

from src.sl2words import (
    CHI,
    IDENTITY,
    Character,
    TRIVIAL,
    S,
    T,
    U,
    CongruenceGroup,
    Mat2,
    char_eval,
    decompose_gamma0_4,
    enumerate_characters,
    format_value,
    gamma0_4_word_to_matrix,
    matrix_to_word,
    membership,
    parse_gamma0_4_word,
    parse_matrix,
    parse_word,
    random_gamma0_4_element,
    random_word,
    root_of_unity,
    t_power,
    verify_lemma_2_1,
    verify_prop_2_2,
    word_to_matrix,
)
from src.utils.errors import NonUnimodular, NotInGroup, WordParseError


class TestMatrices:
    def test_parse_and_format(self):
        m = parse_matrix("[[1, 0], [1, 1]]")
        assert m == Mat2(1, 0, 1, 1)
        assert str(m) == "[[1,0],[1,1]]"

    def test_determinant_must_be_one(self):
        with pytest.raises(NonUnimodular):
            Mat2(1, 1, 1, 1)
        with pytest.raises(NonUnimodular):
            parse_matrix("[[2,0],[0,1]]")

    def test_malformed_matrix(self):
        with pytest.raises(WordParseError):
            parse_matrix("[[1,2],[3]]")

    def test_relations(self):
        assert S @ S == -IDENTITY
        assert (S @ T) ** 3 == -IDENTITY
        assert T ** -3 == t_power(-3)


class TestWords:
    def test_lower_triangular_unipotent(self):
        word = matrix_to_word(Mat2(1, 0, 1, 1))
        assert str(word) == "-S T^-1 S"
        assert word_to_matrix(word) == Mat2(1, 0, 1, 1)

    def test_identity_and_sign(self):
        assert str(matrix_to_word(IDENTITY)) == "I"
        assert str(matrix_to_word(-IDENTITY)) == "-I"

    def test_parse_reduces_syllables(self):
        word = parse_word("T T^2 S S T^-3")
        assert str(word) == "-I"

    def test_unknown_token(self):
        with pytest.raises(WordParseError):
            parse_word("S X")
        with pytest.raises(WordParseError):
            parse_word("T^x")

    def test_random_round_trips(self):
        rng = random.Random(11)
        for _ in range(200):
            m = word_to_matrix(random_word(rng, 30))
            word = matrix_to_word(m)
            assert word_to_matrix(word) == m
            assert word_to_matrix(word.inverse()) == m.inverse()


class TestCharacters:
    def test_six_characters_two_real(self):
        characters = enumerate_characters()
        assert [chi.a for chi in characters] == [0, 1, 2, 3, 4, 5]
        assert [chi.a for chi in characters if chi.is_real] == [0, 3]

    def test_chi_on_generators(self):
        assert format_value(char_eval(CHI, S)) == "-1"
        assert format_value(char_eval(CHI, T)) == "-1"
        assert char_eval(TRIVIAL, S) == 0

    def test_chi_on_lower_unipotent(self):
        assert format_value(CHI(Mat2(1, 0, 1, 1))) == "-1"

    def test_chi_is_trivial_on_gamma0_4_generators(self):
        assert char_eval(CHI, t_power(2)) == 0
        assert char_eval(CHI, U) == 0

    def test_complex_values_render_as_roots_of_unity(self):
        assert format_value(char_eval(enumerate_characters()[1], T)) == "zeta6^1"

    def test_exponent_is_reduced_mod_6(self):
        assert Character(9) == CHI
        assert Character(-1).a == 5

    def test_every_exponent_satisfies_the_relations(self):
        for chi in map(Character, range(6)):
            assert (2 * chi.value_S) % 6 == 0
            assert (3 * (chi.value_S + chi.value_T)) % 6 == 0

    def test_roots_of_unity(self):
        assert abs(root_of_unity(3) + 1) < 1e-15
        assert abs(root_of_unity(6) - 1) < 1e-15
        assert abs(root_of_unity(1) - complex(0.5, 3 ** 0.5 / 2)) < 1e-15
        assert abs(root_of_unity(1) ** 6 - 1) < 1e-14


class TestGamma04:
    """Free generators T and S T^4 S"""

    def test_translation_square(self):
        assert str(decompose_gamma0_4(t_power(2))) == "T^2"

    def test_second_generator(self):
        assert str(decompose_gamma0_4(U)) == "ST^4S"

    def test_outside_the_group(self):
        assert not membership(S, CongruenceGroup.GAMMA0_4)
        with pytest.raises(NotInGroup):
            decompose_gamma0_4(S)

    def test_random_elements_recompose(self):
        rng = random.Random(5)
        for _ in range(200):
            m = random_gamma0_4_element(rng, 25)
            word = decompose_gamma0_4(m)
            assert gamma0_4_word_to_matrix(word) == m
            assert gamma0_4_word_to_matrix(parse_gamma0_4_word(str(word))) == m

    def test_bad_gamma0_4_token(self):
        with pytest.raises(WordParseError):
            parse_gamma0_4_word("T S")


class TestReports:
    def test_lemma_2_1(self):
        report = verify_lemma_2_1()
        assert report.passed, report.details
        assert report.details["real_characters"] == [0, 3]

    def test_prop_2_2(self):
        report = verify_prop_2_2(samples=100, sl2_samples=200)
        assert report.passed, report.details
        assert report.details["chi_exponents"] == {"T^2": 0, "ST^2S": 0, "ST^4S": 0}

    def test_reports_are_deterministic(self):
        first = verify_prop_2_2(seed=3, samples=50, sl2_samples=50).to_json()
        second = verify_prop_2_2(seed=3, samples=50, sl2_samples=50).to_json()
        assert first == second
