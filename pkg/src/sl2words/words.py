"""
Signed words in S and T

A GroupWord is stored as syllables: ("S", 1) or ("T", n) with n != 0, so a
run T T T is the single syllable T^3. Reduction merges T-runs, drops
T^0 and turns S S into a sign flip (S^2 = -I).
"""
import random
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from src.sl2words.matrices import IDENTITY, S, Mat2, t_power
from src.utils.errors import WordParseError
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)

Syllable = Tuple[str, int]


def reduce_syllables(sign: int, syllables: Iterable[Syllable]) -> Tuple[int, Tuple[Syllable, ...]]:
    stack: List[Syllable] = []
    for letter, exponent in syllables:
        if letter == "T":
            if exponent == 0:
                continue
            if stack and stack[-1][0] == "T":
                merged = stack.pop()[1] + exponent
                if merged:
                    stack.append(("T", merged))
                continue
            stack.append(("T", exponent))
        elif letter == "S":
            if stack and stack[-1][0] == "S":
                stack.pop()
                sign = -sign
                continue
            stack.append(("S", 1))
        else:
            raise ValueError(f"Unknown letter {letter}")
    return sign, tuple(stack)


@dataclass(frozen=True)
class GroupWord:
    """sign * (product of syllables), always reduced"""

    sign: int
    syllables: Tuple[Syllable, ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"Sign must be +1 or -1, got {self.sign}")
        sign, reduced = reduce_syllables(self.sign, self.syllables)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "syllables", reduced)

    @classmethod
    def from_letters(cls, letters: Iterable[str], sign: int = 1) -> "GroupWord":
        """Build from letters "S", "T", "T^-1" """
        mapping = {"S": ("S", 1), "T": ("T", 1), "T^-1": ("T", -1)}
        return cls(sign, tuple(mapping[letter] for letter in letters))

    @property
    def letters(self) -> List[str]:
        """Expanded letter sequence over S, T, T^-1"""
        out = []
        for letter, exponent in self.syllables:
            if letter == "S":
                out.append("S")
            else:
                out.extend(["T" if exponent > 0 else "T^-1"] * abs(exponent))
        return out

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.sign * other.sign, self.syllables + other.syllables)

    def inverse(self) -> "GroupWord":
        # S^{-1} = -S
        flips = sum(1 for letter, _ in self.syllables if letter == "S")
        inverted = tuple((letter, -e if letter == "T" else 1) for letter, e in reversed(self.syllables))
        return GroupWord(self.sign * (-1) ** flips, inverted)

    def __len__(self) -> int:
        return len(self.syllables)

    def __str__(self) -> str:
        return format_word(self)


def word_to_matrix(word: GroupWord) -> Mat2:
    result = IDENTITY
    for letter, exponent in word.syllables:
        result = result @ (S if letter == "S" else t_power(exponent))
    return result if word.sign == 1 else -result


def matrix_to_word(m: Mat2) -> GroupWord:
    """
    Decompose M into S and T by bottom-row Euclidean reduction

    M is multiplied on the right by S (bottom row (c, d) -> (d, -c)) and by
    T^n with d reduced to the nearest multiple of c, until c = 0. Then
    M R = sign * T^m and M = sign * T^m R^{-1}.
    """
    if not isinstance(m, Mat2):
        m = Mat2(*m)
    a, b, c, d = m.entries()
    right: List[Syllable] = []
    while c != 0:
        a, b, c, d = b, -a, d, -c
        right.append(("S", 1))
        if c == 0:
            break
        n = -((2 * d + c) // (2 * c))
        b, d = a * n + b, c * n + d
        right.append(("T", n))
    # now a = d = +-1
    sign = a
    shift = b * a
    flips = sum(1 for letter, _ in right if letter == "S")
    inverse = tuple((letter, -e if letter == "T" else 1) for letter, e in reversed(right))
    return GroupWord(sign * (-1) ** flips, (("T", shift),) + inverse)


def format_word(word: GroupWord) -> str:
    """Text such as "-S T^-1 S"; the empty word is "I" """
    parts = []
    for letter, exponent in word.syllables:
        if letter == "S":
            parts.append("S")
        elif exponent == 1:
            parts.append("T")
        else:
            parts.append(f"T^{exponent}")
    body = " ".join(parts) if parts else "I"
    return body if word.sign == 1 else f"-{body}"


def parse_word(text: str) -> GroupWord:
    """
    Parse a word such as "-S T^-1 S", "T^5" or "-I"

    Raises:
        WordParseError: On unknown tokens
    """
    text = text.strip()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:].strip()
    syllables: List[Syllable] = []
    for token in text.split():
        if token == "I":
            continue
        if token == "S":
            syllables.append(("S", 1))
        elif token == "T":
            syllables.append(("T", 1))
        elif token.startswith("T^"):
            try:
                syllables.append(("T", int(token[2:])))
            except ValueError:
                error_msg = f"Bad exponent in {token!r}"
                logger.error(error_msg)
                raise WordParseError(error_msg)
        else:
            error_msg = f"Unknown token {token!r} in word {text!r}"
            logger.error(error_msg)
            raise WordParseError(error_msg)
    return GroupWord(sign, tuple(syllables))


def random_word(rng: random.Random, max_length: int) -> GroupWord:
    """Random signed word of at most max_length letters S, T, T^-1"""
    length = rng.randint(0, max_length)
    letters = [rng.choice(("S", "T", "T^-1")) for _ in range(length)]
    return GroupWord.from_letters(letters, sign=rng.choice((1, -1)))
