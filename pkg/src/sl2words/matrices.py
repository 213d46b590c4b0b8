"""
Unimodular integer 2x2 matrices and their text format "[[a,b],[c,d]]"
"""
import re
from dataclasses import dataclass

from src.utils.errors import NonUnimodular, WordParseError
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)

_MATRIX_PATTERN = re.compile(
    r"^\s*\[\s*\[\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\]\s*,\s*\[\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\]\s*\]\s*$"
)


@dataclass(frozen=True)
class Mat2:
    """Element of SL2(Z): ad - bc = 1"""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            error_msg = f"Matrix {format_matrix(self)} has determinant {self.a * self.d - self.b * self.c}, not 1"
            logger.error(error_msg)
            raise NonUnimodular(error_msg)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "Mat2":
        base = self if n >= 0 else self.inverse()
        result = IDENTITY
        for _ in range(abs(n)):
            result = result @ base
        return result

    def entries(self):
        return self.a, self.b, self.c, self.d

    def __str__(self) -> str:
        return format_matrix(self)


def t_power(n: int) -> Mat2:
    """T^n in closed form"""
    return Mat2(1, n, 0, 1)


def format_matrix(m) -> str:
    return f"[[{m.a},{m.b}],[{m.c},{m.d}]]"


def parse_matrix(text: str) -> Mat2:
    """
    Parse "[[a,b],[c,d]]"

    Raises:
        WordParseError: If the text is not a 2x2 integer matrix
        NonUnimodular: If the determinant is not 1
    """
    match = _MATRIX_PATTERN.match(text)
    if not match:
        error_msg = f"Cannot parse matrix {text!r}; expected [[a,b],[c,d]]"
        logger.error(error_msg)
        raise WordParseError(error_msg)
    return Mat2(*(int(g) for g in match.groups()))


IDENTITY = Mat2(1, 0, 0, 1)
S = Mat2(0, -1, 1, 0)
T = Mat2(1, 1, 0, 1)
