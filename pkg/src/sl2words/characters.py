"""
Characters of PSL2(Z)

PSL2(Z) = <S, T | S^2 = (ST)^3 = 1>, so a character is fixed by
chi(T) = zeta6^a; then chi(S) = chi(T)^3 = (-1)^a. Values are kept as
exponents of zeta6 = exp(2 pi i / 6).
"""
from dataclasses import dataclass
from typing import List, Union

import mpmath as mp

from src.sl2words.matrices import Mat2
from src.sl2words.words import GroupWord, matrix_to_word


@dataclass(frozen=True)
class Character:
    """chi(T) = zeta6^a with a taken mod 6"""

    a: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % 6)

    @property
    def value_T(self) -> int:
        return self.a

    @property
    def value_S(self) -> int:
        return (3 * self.a) % 6

    @property
    def is_real(self) -> bool:
        return self.a in (0, 3)

    @property
    def is_trivial(self) -> bool:
        return self.a == 0

    def on_word(self, word: GroupWord) -> int:
        """Exponent of chi on a word; the sign is ignored"""
        total = 0
        for letter, exponent in word.syllables:
            total += self.value_S if letter == "S" else exponent * self.value_T
        return total % 6

    def __call__(self, element: Union[Mat2, GroupWord]) -> int:
        if isinstance(element, GroupWord):
            return self.on_word(element)
        return char_eval(self, element)


CHI = Character(3)
TRIVIAL = Character(0)


def enumerate_characters() -> List[Character]:
    """
    All six characters, enumerated over the admissible pairs (chi(S), chi(ST))

    chi(S) must be a square root of unity (exponent 0 or 3) and chi(ST) a cube
    root (exponent 0, 2 or 4); chi(T) = chi(S)^{-1} chi(ST).
    """
    characters = set()
    for s in (0, 3):
        for u in (0, 2, 4):
            characters.add(Character((u - s) % 6))
    return sorted(characters, key=lambda chi: chi.a)


def char_eval(chi: Character, m: Mat2) -> int:
    """chi(M) as an exponent of zeta6, via the S/T word of M"""
    return chi.on_word(matrix_to_word(m))


def root_of_unity(exponent: int) -> complex:
    """zeta6^exponent at the working mpmath precision"""
    return complex(mp.expjpi(mp.mpf(exponent % 6) / 3))


def format_value(exponent: int) -> str:
    """"1", "-1" or "zeta6^e" """
    exponent %= 6
    if exponent == 0:
        return "1"
    if exponent == 3:
        return "-1"
    return f"zeta6^{exponent}"
