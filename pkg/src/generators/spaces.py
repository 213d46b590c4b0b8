"""
Form Spaces

Exact echelon bases of M_k and S_k for SL2(Z), Gamma0(2), Gamma0(4) and of
the cusp forms of character chi on SL2(Z). Every basis is checked against a
closed-form dimension before it is returned.
"""
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from src.config import Config
from src.exactseries import (
    Grid,
    QExpansion,
    as_half,
    eta_product,
    from_json as series_from_json,
    mul,
    to_json as series_to_json,
)
from src.generators.echelon import contains, coordinates, echelon, in_span
from src.generators.eisenstein import CUSP_IDEALS, cusp_generator, ring_generators
from src.generators.labels import CharacterLabel, GroupLabel, SpaceKind
from src.utils.errors import DimensionMismatch, InsufficientPrecision, OddWeight, UnsupportedWeight
from src.utils.logging_config import get_logger

# Initialize logger
logger = get_logger(__name__)


@dataclass(frozen=True)
class FormSpace:
    """A weight-k space of forms given by a reduced echelon basis"""

    group: GroupLabel
    weight: int
    character: CharacterLabel
    kind: SpaceKind
    basis: Tuple[QExpansion, ...]
    sturm: int
    precision: int
    meta: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.character is CharacterLabel.CHI and self.group is not GroupLabel.SL2Z:
            raise ValueError("Character chi is only defined on SL2(Z)")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def grid(self) -> Grid:
        return Grid.HALF if self.character is CharacterLabel.CHI else Grid.INTEGER

    @property
    def pivots(self) -> List[int]:
        return [f.valuation() for f in self.basis]

    def coordinates(self, f: QExpansion):
        return coordinates(self.basis, f)

    def __contains__(self, f: QExpansion) -> bool:
        return in_span(self.basis, f)

    def contains_space(self, other: "FormSpace") -> bool:
        return contains(self.basis, other.basis)

    def to_json(self) -> Dict[str, Any]:
        return {
            "group": self.group.value,
            "weight": self.weight,
            "character": self.character.value,
            "kind": self.kind.value,
            "sturm": self.sturm,
            "precision": self.precision,
            "basis": [series_to_json(f) for f in self.basis],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "FormSpace":
        return cls(
            group=GroupLabel(data["group"]),
            weight=int(data["weight"]),
            character=CharacterLabel(data["character"]),
            kind=SpaceKind(data.get("kind", SpaceKind.S.value)),
            basis=tuple(series_from_json(f) for f in data["basis"]),
            sturm=int(data["sturm"]),
            precision=int(data["precision"]),
        )


# ------------------------------------------------------------------ dimensions

def _check_weight(k: int) -> None:
    if k % 2:
        error_msg = f"Weight {k} is odd; k must be an even positive integer"
        logger.error(error_msg)
        raise OddWeight(error_msg)
    if k < 0:
        error_msg = f"Weight {k} is negative"
        logger.error(error_msg)
        raise UnsupportedWeight(error_msg)


def dimension_M(group: GroupLabel, k: int) -> int:
    """Closed-form dimension of M_k(group) for even k (0 for negative k)"""
    group = GroupLabel(group)
    if k < 0 or k % 2:
        return 0
    if group is GroupLabel.SL2Z:
        return k // 12 if k % 12 == 2 else k // 12 + 1
    if group is GroupLabel.GAMMA0_2:
        return k // 4 + 1
    return k // 2 + 1


def dimension_S(group: GroupLabel, k: int) -> int:
    """Closed-form dimension of S_k(group)"""
    group = GroupLabel(group)
    if k < 4 or k % 2:
        return 0
    cusps = {GroupLabel.SL2Z: 1, GroupLabel.GAMMA0_2: 2, GroupLabel.GAMMA0_4: 3}[group]
    return max(dimension_M(group, k) - cusps, 0)


def dimension_S_chi(k: int) -> int:
    return dimension_M(GroupLabel.SL2Z, k - 6)


def sturm_bound(group: GroupLabel, k: int, character: CharacterLabel = CharacterLabel.TRIVIAL) -> int:
    """
    Coefficient count (twice-exponent units) that determines a form, plus margin

    The chi space is measured in the local parameter q^{1/2} of Gamma(2).
    """
    group = GroupLabel(group)
    if CharacterLabel(character) is CharacterLabel.CHI:
        return (k * 6) // 12 + Config.STURM_MARGIN
    return 2 * ((k * group.index) // 12) + Config.STURM_MARGIN


def working_precision(group: GroupLabel, k: int, character: CharacterLabel = CharacterLabel.TRIVIAL) -> int:
    precision = max(Config.OPERATOR_PRECISION_FACTOR * sturm_bound(group, k, character), Config.PRECISION_FLOOR)
    return min(precision, Config.PRECISION_CAP)


def resolve_precision(
    group: GroupLabel, k: int, precision: Optional[int], character: CharacterLabel = CharacterLabel.TRIVIAL
) -> Tuple[int, int]:
    """
    Sturm bound and effective precision for a request

    Raises:
        InsufficientPrecision: If an override is below the Sturm bound or above the cap
    """
    sturm = sturm_bound(group, k, character)
    if precision is None:
        return sturm, working_precision(group, k, character)
    if precision < sturm:
        error_msg = f"Precision {precision} is below the Sturm bound {sturm} of weight {k} on {GroupLabel(group).value}"
        logger.error(error_msg)
        raise InsufficientPrecision(error_msg)
    if precision > Config.PRECISION_CAP:
        error_msg = f"Precision {precision} exceeds the configured cap {Config.PRECISION_CAP}"
        logger.error(error_msg)
        raise InsufficientPrecision(error_msg)
    return sturm, precision


def _check_dimension(found: int, expected: int, what: str) -> None:
    if found != expected:
        error_msg = f"{what}: rank {found} disagrees with closed-form dimension {expected}"
        logger.error(error_msg)
        raise DimensionMismatch(error_msg)


# --------------------------------------------------------------------- bases

@lru_cache(maxsize=256)
def _power(group: GroupLabel, index: int, exponent: int, precision: int) -> QExpansion:
    if exponent == 0:
        return QExpansion(Grid.INTEGER, precision, {0: 1})
    base = ring_generators(group, precision)[index].series
    return mul(_power(group, index, exponent - 1, precision), base)


def monomials(group: GroupLabel, k: int, precision: int) -> List[QExpansion]:
    """All weight-k monomials g1^a g2^b in the ring generators"""
    group = GroupLabel(group)
    if k == 0:
        return [QExpansion(Grid.INTEGER, precision, {0: 1})]
    first, second = ring_generators(group, precision)
    result = []
    for b in range(k // second.weight + 1):
        rest = k - b * second.weight
        if rest % first.weight:
            continue
        a = rest // first.weight
        result.append(mul(_power(group, 0, a, precision), _power(group, 1, b, precision)))
    return result


@lru_cache(maxsize=128)
def basis_M(group: GroupLabel, k: int, precision: Optional[int] = None) -> FormSpace:
    """
    Echelon basis of M_k(group)

    Args:
        group: Group label
        k: Even weight, k >= 0
        precision: Optional override in twice-exponent units

    Returns:
        FormSpace of kind M
    """
    _check_weight(k)
    group = GroupLabel(group)
    sturm, precision = resolve_precision(group, k, precision)
    basis = echelon(monomials(group, k, precision))
    _check_dimension(len(basis), dimension_M(group, k), f"M_{k}({group.value})")
    return FormSpace(group, k, CharacterLabel.TRIVIAL, SpaceKind.M, tuple(basis), sturm, precision)


@lru_cache(maxsize=128)
def basis_S(group: GroupLabel, k: int, precision: Optional[int] = None) -> FormSpace:
    """
    Echelon basis of S_k(group) as the cusp-ideal generator times M_{k-w}

    Args:
        group: Group label
        k: Even weight
        precision: Optional override in twice-exponent units

    Returns:
        FormSpace of kind S
    """
    _check_weight(k)
    group = GroupLabel(group)
    sturm, precision = resolve_precision(group, k, precision)
    series = []
    if k >= CUSP_IDEALS[group][1]:
        cusp = cusp_generator(group, precision)
        series = [mul(cusp.series, m) for m in monomials(group, k - cusp.weight, precision)]
    basis = echelon(series)
    _check_dimension(len(basis), dimension_S(group, k), f"S_{k}({group.value})")
    logger.info(f"✅ Built S_{k}({group.value}) with dimension {len(basis)} at precision {precision}")
    return FormSpace(group, k, CharacterLabel.TRIVIAL, SpaceKind.S, tuple(basis), sturm, precision)


@lru_cache(maxsize=64)
def basis_S_chi(k: int, precision: Optional[int] = None) -> FormSpace:
    """
    Echelon basis of S(SL2(Z), k, chi) = eta^12 * M_{k-6}(SL2(Z)) on the half grid
    """
    _check_weight(k)
    sturm, precision = resolve_precision(GroupLabel.SL2Z, k, precision, CharacterLabel.CHI)
    series = []
    if k >= 6:
        eta12 = eta_product([(1, 12)], precision)
        series = [mul(eta12, as_half(m)) for m in monomials(GroupLabel.SL2Z, k - 6, precision)]
    basis = echelon(series)
    _check_dimension(len(basis), dimension_S_chi(k), f"S({k}, chi)")
    logger.info(f"✅ Built S(SL2Z, {k}, chi) with dimension {len(basis)} at precision {precision}")
    return FormSpace(GroupLabel.SL2Z, k, CharacterLabel.CHI, SpaceKind.S, tuple(basis), sturm, precision)


def build_space(
    group: GroupLabel, k: int, kind: SpaceKind, character: CharacterLabel = CharacterLabel.TRIVIAL,
    precision: Optional[int] = None,
) -> FormSpace:
    """Dispatch for the spaces built in this package (M, S and the chi space)"""
    if CharacterLabel(character) is CharacterLabel.CHI:
        return basis_S_chi(k, precision)
    if SpaceKind(kind) is SpaceKind.M:
        return basis_M(group, k, precision)
    return basis_S(group, k, precision)


def subspace(space: FormSpace, kind: SpaceKind, series: List[QExpansion]) -> FormSpace:
    """FormSpace for the span of series inside space"""
    basis = tuple(echelon(series, space.precision)) if series else ()
    return replace(space, kind=SpaceKind(kind), basis=basis, meta={})


def reexpand(space: FormSpace, precision: int) -> FormSpace:
    """
    The same space at a different precision

    Each basis vector is rewritten in the echelon basis of its ambient M or S
    space, and that combination is re-evaluated from series built at the new
    precision. Both precisions must be at least the Sturm bound.
    """
    if precision == space.precision:
        return space
    if space.kind is SpaceKind.M:
        ambient_kind = SpaceKind.M
    else:
        ambient_kind = SpaceKind.S
    old_ambient = build_space(space.group, space.weight, ambient_kind, space.character, space.precision)
    new_ambient = build_space(space.group, space.weight, ambient_kind, space.character, precision)
    rows = []
    for f in space.basis:
        coords = old_ambient.coordinates(f)
        if coords is None:
            error_msg = f"Basis vector of {space.kind.value} is not in its ambient space"
            logger.error(error_msg)
            raise DimensionMismatch(error_msg)
        total = QExpansion(space.grid, precision)
        for c, g in zip(coords, new_ambient.basis):
            if c:
                total = total + c * g
        rows.append(total)
    return replace(space, basis=tuple(rows), precision=precision)
