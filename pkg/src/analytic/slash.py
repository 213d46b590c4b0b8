"""
Weight-k slash action and the sample points it is checked at
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

import mpmath as mp

from src.analytic.evaluation import NumericValue, check_upper_half_plane, eval_series
from src.exactseries import QExpansion
from src.sl2words import Mat2, random_word, word_to_matrix
from src.utils.errors import SingularMatrix
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)

Entry = Union[int, Fraction]

# sample policy around the fixed circle of W_N
RADIUS_JITTER = (0.9, 1.1)
ARGUMENT_RANGE = (mp.pi / 3, 2 * mp.pi / 3)
# bottom-left entries allowed for automorphy samples
MAX_AUTOMORPHY_C = 12
# sample used for words with c = 0
TRANSLATION_SAMPLE = complex(0.25, 0.8)


@dataclass(frozen=True)
class SlashMatrix:
    """Rational 2x2 matrix of positive determinant acting by the slash operator"""

    a: Entry
    b: Entry
    c: Entry
    d: Entry
    name: str = ""

    def __post_init__(self):
        if self.det <= 0:
            error_msg = f"Slash operator needs positive determinant, got {self.det} for {self}"
            logger.error(error_msg)
            raise SingularMatrix(error_msg)

    @property
    def det(self) -> Fraction:
        return Fraction(self.a) * Fraction(self.d) - Fraction(self.b) * Fraction(self.c)

    @classmethod
    def from_mat2(cls, m: Mat2) -> "SlashMatrix":
        return cls(m.a, m.b, m.c, m.d, str(m))

    def __matmul__(self, other: "SlashMatrix") -> "SlashMatrix":
        return SlashMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def act(self, tau):
        """Mobius action (a tau + b) / (c tau + d)"""
        a, b, c, d = (mp.mpf(Fraction(x).numerator) / Fraction(x).denominator for x in (self.a, self.b, self.c, self.d))
        return (a * tau + b) / (c * tau + d)

    def __str__(self) -> str:
        return self.name or f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def fricke(level: int) -> SlashMatrix:
    return SlashMatrix(0, -1, level, 0, f"W{level}")


W4 = fricke(4)
W2 = fricke(2)
V2 = SlashMatrix(2, 0, 0, 1, "V2")
T_HALF = SlashMatrix(1, Fraction(1, 2), 0, 1, "T_1/2")
IDENTITY = SlashMatrix(1, 0, 0, 1, "I")


def slash_numeric(f: QExpansion, k: int, m: SlashMatrix, tau, terms: Optional[int] = None) -> NumericValue:
    """
    (f|_k M)(tau) = det(M)^{k/2} (c tau + d)^{-k} f(M tau)

    The truncation bound of f(M tau) is scaled by the same automorphy factor.
    """
    if isinstance(m, Mat2):
        m = SlashMatrix.from_mat2(m)
    tau = mp.mpc(tau)
    check_upper_half_plane(tau)
    c = mp.mpf(Fraction(m.c).numerator) / Fraction(m.c).denominator
    d = mp.mpf(Fraction(m.d).numerator) / Fraction(m.d).denominator
    det = m.det
    factor = mp.power(mp.mpf(det.numerator) / det.denominator, mp.mpf(k) / 2) * mp.power(c * tau + d, -k)
    inner = eval_series(f, m.act(tau), k, terms)
    return NumericValue(complex(factor * inner.value), float(abs(factor) * inner.abs_error), inner.envelope_A)


def sample_points(seed: int, count: int, level: int) -> List[complex]:
    """
    Seeded points near the fixed circle |tau| = 1/sqrt(N) of W_N

    The first point is the fixed point i/sqrt(N); the others have radius
    jittered by 10% and argument in [pi/3, 2pi/3], so tau and W_N tau both
    keep imaginary part >= 0.35 at N = 4.
    """
    rng = random.Random(seed)
    radius = 1 / mp.sqrt(level)
    points = [complex(mp.mpc(0, radius))]
    for _ in range(count - 1):
        r = radius * rng.uniform(*RADIUS_JITTER)
        theta = rng.uniform(float(ARGUMENT_RANGE[0]), float(ARGUMENT_RANGE[1]))
        points.append(complex(r * mp.expj(theta)))
    return points


def automorphy_sample(m: Mat2) -> complex:
    """tau = -d/c + i/|c|, so that |c tau + d| = 1 and Im(M tau) = Im tau"""
    if m.c == 0:
        return TRANSLATION_SAMPLE
    return complex(-m.d / m.c, 1 / abs(m.c))


def random_automorphy_words(rng: random.Random, count: int, max_length: int = 8) -> List[Tuple[str, Mat2]]:
    """Random S/T words whose matrices have |c| <= MAX_AUTOMORPHY_C"""
    words = []
    while len(words) < count:
        word = random_word(rng, max_length)
        matrix = word_to_matrix(word)
        if abs(matrix.c) <= MAX_AUTOMORPHY_C:
            words.append((str(word), matrix))
    return words
