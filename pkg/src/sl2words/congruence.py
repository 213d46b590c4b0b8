"""
Congruence subgroups Gamma0(2), Gamma0(4), Gamma(2) and the free generators of Gamma0(4)

Gamma0(4)/{+-I} is free on T and U = S T^4 S. Conjugating by V2 = diag(2, 1)
sends Gamma0(4) onto Gamma(2), where the free generators A = ((1,2),(0,1))
and B = ((1,0),(2,1)) are found by ping-pong on the first column. Back in
Gamma0(4), A becomes T and B becomes ((1,0),(4,1)) = -U^{-1}.
"""
import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from src.sl2words.matrices import IDENTITY, S, Mat2, t_power
from src.utils.errors import NotInGroup, WordParseError
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)


class CongruenceGroup(str, Enum):
    GAMMA0_2 = "g0_2"
    GAMMA0_4 = "g0_4"
    GAMMA_2 = "gamma2"


def membership(m: Mat2, group: CongruenceGroup) -> bool:
    """Entrywise congruence conditions"""
    group = CongruenceGroup(group)
    if group is CongruenceGroup.GAMMA0_2:
        return m.c % 2 == 0
    if group is CongruenceGroup.GAMMA0_4:
        return m.c % 4 == 0
    return m.b % 2 == 0 and m.c % 2 == 0 and m.a % 2 == 1 and m.d % 2 == 1


# U = S T^4 S
U = S @ t_power(4) @ S

Syllable = Tuple[str, int]


@dataclass(frozen=True)
class Gamma04Word:
    """sign * product of syllables ("T", n) and ("U", n), U = S T^4 S"""

    sign: int
    syllables: Tuple[Syllable, ...]

    def __post_init__(self):
        merged: List[Syllable] = []
        for letter, exponent in self.syllables:
            if letter not in ("T", "U"):
                raise ValueError(f"Unknown generator {letter}")
            if merged and merged[-1][0] == letter:
                exponent += merged.pop()[1]
            if exponent:
                merged.append((letter, exponent))
        object.__setattr__(self, "syllables", tuple(merged))

    def __str__(self) -> str:
        return format_gamma0_4_word(self)


def gamma0_4_word_to_matrix(word: Gamma04Word) -> Mat2:
    result = IDENTITY
    for letter, exponent in word.syllables:
        result = result @ (t_power(exponent) if letter == "T" else U ** exponent)
    return result if word.sign == 1 else -result


def decompose_gamma0_4(m: Mat2) -> Gamma04Word:
    """
    Write M in Gamma0(4) as a signed word in T and S T^4 S

    Raises:
        NotInGroup: If M is not in Gamma0(4)
    """
    if not membership(m, CongruenceGroup.GAMMA0_4):
        error_msg = f"{m} is not in Gamma0(4)"
        logger.error(error_msg)
        raise NotInGroup(error_msg)
    # conjugate into Gamma(2)
    a, b, c, d = m.a, 2 * m.b, m.c // 2, m.d
    # left multiplications applied so far, as ("A" | "B", n)
    applied: List[Syllable] = []
    while c != 0:
        if abs(a) > abs(c):
            n = -((a + c) // (2 * c))
            a, b = a + 2 * n * c, b + 2 * n * d
            applied.append(("A", n))
        else:
            n = -((c + a) // (2 * a))
            c, d = c + 2 * n * a, d + 2 * n * b
            applied.append(("B", n))
    # remaining matrix is sign * A^e
    sign = a
    e = (b * a) // 2

    syllables: List[Syllable] = []
    for letter, n in applied:
        # (A^n)^{-1} = A^{-n} -> T^{-n}; (B^n)^{-1} = B^{-n} -> (-U^{-1})^{-n} = (-1)^n U^n
        if letter == "A":
            syllables.append(("T", -n))
        else:
            syllables.append(("U", n))
            if n % 2:
                sign = -sign
    syllables.append(("T", e))
    return Gamma04Word(sign, tuple(syllables))


def format_gamma0_4_word(word: Gamma04Word) -> str:
    """Text such as "T^2", "ST^4S" or "-(ST^4S)^-1 T" """
    parts = []
    for letter, exponent in word.syllables:
        if letter == "T":
            parts.append("T" if exponent == 1 else f"T^{exponent}")
        else:
            parts.append("ST^4S" if exponent == 1 else f"(ST^4S)^{exponent}")
    body = " ".join(parts) if parts else "I"
    return body if word.sign == 1 else f"-{body}"


_G04_TOKEN = re.compile(r"^(?:T(?:\^([+-]?\d+))?|ST\^4S|\(ST\^4S\)\^([+-]?\d+))$")


def parse_gamma0_4_word(text: str) -> Gamma04Word:
    text = text.strip()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:].strip()
    syllables: List[Syllable] = []
    for token in text.split():
        if token == "I":
            continue
        match = _G04_TOKEN.match(token)
        if not match:
            error_msg = f"Unknown Gamma0(4) token {token!r}"
            logger.error(error_msg)
            raise WordParseError(error_msg)
        if token.startswith("T"):
            syllables.append(("T", int(match.group(1) or 1)))
        else:
            syllables.append(("U", int(match.group(2) or 1)))
    return Gamma04Word(sign, tuple(syllables))


def random_gamma0_4_element(rng: random.Random, max_length: int) -> Mat2:
    """Random product of T^{+-1}, U^{+-1} and -I"""
    result = IDENTITY
    for _ in range(rng.randint(0, max_length)):
        generator = rng.choice((t_power(1), t_power(-1), U, U.inverse()))
        result = result @ generator
    return result if rng.random() < 0.5 else -result


def random_gamma2_element(rng: random.Random, max_length: int) -> Mat2:
    """Random product of T^{+-2}, S T^{+-2} S and -I"""
    choices = (t_power(2), t_power(-2), S @ t_power(2) @ S, S @ t_power(-2) @ S)
    result = IDENTITY
    for _ in range(rng.randint(0, max_length)):
        result = result @ rng.choice(choices)
    return result if rng.random() < 0.5 else -result
