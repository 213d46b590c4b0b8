"""
Truncated q-expansions with exact rational coefficients

Exponents are stored as twice-exponent integer keys m, so q^n sits at
m = 2n and q^{n+1/2} at m = 2n+1. One sparse map type then covers both the
integer grid (level 2 and 4 forms) and the half-integer grid (forms of
character chi on the full modular group).
"""
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from src.config import Config
from src.utils.errors import GridError, NonRealMultiplier
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)

Scalar = Union[int, Fraction]


class Grid(str, Enum):
    """Exponent grid of a q-expansion"""

    INTEGER = "int"
    HALF = "half"


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" (or a bare integer) into a Fraction"""
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class QExpansion:
    """
    Immutable truncated expansion sum c_m q^{m/2}, 0 <= m < precision

    Zero coefficients are never stored, so equality of two expansions is
    equality of grid, precision and coefficient map.
    """

    __slots__ = ("_grid", "_precision", "_coeffs")

    def __init__(self, grid: Union[Grid, str], precision: int, coeffs: Optional[Mapping[int, Scalar]] = None):
        grid = Grid(grid)
        if precision < 1:
            raise ValueError(f"Precision must be positive, got {precision}")
        canonical: Dict[int, Fraction] = {}
        for m, c in (coeffs or {}).items():
            m = int(m)
            if m < 0:
                raise GridError(f"Negative twice-exponent {m}")
            if m >= precision:
                continue
            c = Fraction(c)
            if c == 0:
                continue
            if grid is Grid.INTEGER and m % 2:
                raise GridError(f"Odd twice-exponent {m} on the integer grid")
            canonical[m] = c
        self._grid = grid
        self._precision = precision
        self._coeffs = dict(sorted(canonical.items()))

    # ------------------------------------------------------------------ access

    @property
    def grid(self) -> Grid:
        return self._grid

    @property
    def precision(self) -> int:
        return self._precision

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        """Copy of the sparse coefficient map (twice-exponent -> coefficient)"""
        return dict(self._coeffs)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """Supported (twice-exponent, coefficient) pairs in increasing order"""
        return iter(self._coeffs.items())

    def keys(self) -> Iterable[int]:
        return self._coeffs.keys()

    def __getitem__(self, m: int) -> Fraction:
        return self._coeffs.get(m, Fraction(0))

    def coefficient(self, exponent: Scalar) -> Fraction:
        """Coefficient of q^exponent; exponent may be a half-integer"""
        twice = Fraction(exponent) * 2
        if twice.denominator != 1:
            raise GridError(f"Exponent {exponent} is not on the half-integer grid")
        m = int(twice)
        if m >= self._precision:
            raise ValueError(f"q^{exponent} lies beyond precision {self._precision}")
        return self[m]

    def is_zero(self) -> bool:
        return not self._coeffs

    def valuation(self) -> Optional[int]:
        """Smallest supported twice-exponent, None for the zero series"""
        return next(iter(self._coeffs), None)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())

    # -------------------------------------------------------------- arithmetic

    def __add__(self, other: "QExpansion") -> "QExpansion":
        return add(self, other)

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        return add(self, scale(other, -1))

    def __neg__(self) -> "QExpansion":
        return scale(self, -1)

    def __mul__(self, other: Any) -> "QExpansion":
        if isinstance(other, QExpansion):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        return NotImplemented

    def __rmul__(self, other: Any) -> "QExpansion":
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QExpansion):
            return NotImplemented
        return (
            self._grid is other._grid
            and self._precision == other._precision
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self._grid, self._precision, tuple(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"QExpansion({self._grid.value}, P={self._precision}, {self})"

    def __str__(self) -> str:
        return render(self)


# ---------------------------------------------------------------- operations

def add(a: QExpansion, b: QExpansion) -> QExpansion:
    """Coefficientwise sum, truncated to the smaller precision"""
    if a.grid is not b.grid:
        raise GridError(f"Cannot add series on grids {a.grid.value} and {b.grid.value}")
    precision = min(a.precision, b.precision)
    total: Dict[int, Fraction] = {}
    for series in (a, b):
        for m, c in series.items():
            if m < precision:
                total[m] = total.get(m, 0) + c
    return QExpansion(a.grid, precision, total)


def scale(f: QExpansion, c: Scalar) -> QExpansion:
    """Scalar multiple c*f"""
    c = Fraction(c)
    return QExpansion(f.grid, f.precision, {m: c * v for m, v in f.items()})


def mul(a: QExpansion, b: QExpansion) -> QExpansion:
    """
    Truncated Cauchy product

    Exponents add. A product of two half-grid series lands on the integer
    grid when every resulting key is even.
    """
    if a.grid is not b.grid:
        raise GridError(f"Cannot multiply series on grids {a.grid.value} and {b.grid.value}")
    precision = min(a.precision, b.precision)
    integral = a.is_integral() and b.is_integral()
    left = [(m, int(c) if integral else c) for m, c in a.items()]
    right = [(m, int(c) if integral else c) for m, c in b.items()]

    product: Dict[int, Any] = {}
    for m1, c1 in left:
        if m1 >= precision:
            break
        for m2, c2 in right:
            m = m1 + m2
            if m >= precision:
                break
            product[m] = product.get(m, 0) + c1 * c2

    grid = a.grid
    if grid is Grid.HALF and product and all(m % 2 == 0 for m in product):
        grid = Grid.INTEGER
    return QExpansion(grid, precision, product)


def truncate(f: QExpansion, precision: int) -> QExpansion:
    """Lower the precision to min(f.precision, precision)"""
    if precision >= f.precision:
        return f
    return QExpansion(f.grid, precision, f.coeffs)


def as_half(f: QExpansion) -> QExpansion:
    """View an integer-grid series on the half grid (always legal)"""
    if f.grid is Grid.HALF:
        return f
    return QExpansion(Grid.HALF, f.precision, f.coeffs)


def normalize_grid(f: QExpansion) -> QExpansion:
    """Relabel a half-grid series whose keys are all even as integer-grid"""
    if f.grid is Grid.HALF and all(m % 2 == 0 for m in f.keys()):
        return QExpansion(Grid.INTEGER, f.precision, f.coeffs)
    return f


def rescale_variable(f: QExpansion, d: int, cap: Optional[int] = None) -> QExpansion:
    """
    Substitute q -> q^d (the action of V_d up to normalization)

    Keys move from m to m*d, the precision grows to min(P*d, cap). An even
    rescaling of a half-grid series lands on the integer grid.
    """
    if d < 1:
        raise ValueError(f"Rescaling factor must be positive, got {d}")
    cap = Config.PRECISION_CAP if cap is None else cap
    precision = min(f.precision * d, cap)
    grid = Grid.INTEGER if (f.grid is Grid.HALF and d % 2 == 0) else f.grid
    return QExpansion(grid, precision, {m * d: c for m, c in f.items()})


def translation_sign_action(f: QExpansion, t: Scalar) -> QExpansion:
    """
    Evaluate f(tau + t) for translations with real multipliers

    The term q^{m/2} picks up exp(pi*i*m*t), which is (-1)^{m*t} when m*t is
    an integer.
    """
    t = Fraction(t)
    shifted: Dict[int, Fraction] = {}
    for m, c in f.items():
        power = m * t
        if power.denominator != 1:
            raise NonRealMultiplier(
                f"Translation by {t} multiplies q^({m}/2) by a non-real root of unity"
            )
        shifted[m] = -c if int(power) % 2 else c
    return QExpansion(f.grid, f.precision, shifted)


# ------------------------------------------------------------- serialization

def to_json(f: QExpansion) -> Dict[str, Any]:
    """JSON-ready dict; keys are decimal twice-exponents, values "num/den" """
    return {
        "grid": f.grid.value,
        "precision": f.precision,
        "coeffs": {str(m): format_rational(c) for m, c in f.items()},
    }


def from_json(data: Mapping[str, Any]) -> QExpansion:
    try:
        return QExpansion(
            Grid(data["grid"]),
            int(data["precision"]),
            {int(m): parse_rational(c) for m, c in data["coeffs"].items()},
        )
    except (KeyError, TypeError, ValueError) as e:
        error_msg = f"Malformed q-expansion JSON: {e}"
        logger.error(error_msg)
        raise ValueError(error_msg) from e


def _format_power(m: int) -> str:
    if m == 0:
        return ""
    if m % 2:
        return f"q^({m}/2)"
    n = m // 2
    return "q" if n == 1 else f"q^{n}"


def render(f: QExpansion, max_terms: int = 12) -> str:
    """Human-readable form, e.g. "q - 12q^3 + 54q^5 + O(q^7)" """
    pieces = []
    for index, (m, c) in enumerate(f.items()):
        if index == max_terms:
            pieces.append("+ ...")
            break
        power = _format_power(m)
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if power and magnitude == 1:
            body = power
        else:
            body = f"{magnitude}{power}" if magnitude.denominator == 1 else f"({magnitude}){power}"
        pieces.append(f"{sign} {body}")
    big_o = f"O({_format_power(f.precision) or '1'})"
    if not pieces:
        return big_o
    text = " ".join(pieces)
    text = text[2:] if text.startswith("+ ") else "-" + text[2:]
    return f"{text} + {big_o}"
