"""
Integer matrix words, characters of PSL2(Z) and congruence subgroups
"""
from .matrices import IDENTITY, S, T, Mat2, format_matrix, parse_matrix, t_power
from .words import GroupWord, format_word, matrix_to_word, parse_word, random_word, word_to_matrix
from .characters import CHI, TRIVIAL, Character, char_eval, enumerate_characters, format_value, root_of_unity
from .congruence import (
    U,
    CongruenceGroup,
    Gamma04Word,
    decompose_gamma0_4,
    format_gamma0_4_word,
    gamma0_4_word_to_matrix,
    membership,
    parse_gamma0_4_word,
    random_gamma0_4_element,
    random_gamma2_element,
)
from .verification import syllable_bound, verify_lemma_2_1, verify_prop_2_2

__all__ = [
    "IDENTITY",
    "S",
    "T",
    "U",
    "Mat2",
    "format_matrix",
    "parse_matrix",
    "t_power",
    "GroupWord",
    "format_word",
    "matrix_to_word",
    "parse_word",
    "random_word",
    "word_to_matrix",
    "CHI",
    "TRIVIAL",
    "Character",
    "char_eval",
    "enumerate_characters",
    "format_value",
    "root_of_unity",
    "CongruenceGroup",
    "Gamma04Word",
    "decompose_gamma0_4",
    "format_gamma0_4_word",
    "gamma0_4_word_to_matrix",
    "membership",
    "parse_gamma0_4_word",
    "random_gamma0_4_element",
    "random_gamma2_element",
    "syllable_bound",
    "verify_lemma_2_1",
    "verify_prop_2_2",
]
