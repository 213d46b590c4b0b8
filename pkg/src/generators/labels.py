"""
Labels for groups, characters and kinds of form spaces
"""
from enum import Enum


class GroupLabel(str, Enum):
    """Congruence subgroups whose form spaces are built"""

    SL2Z = "sl2z"
    GAMMA0_2 = "g0_2"
    GAMMA0_4 = "g0_4"

    @property
    def level(self) -> int:
        return {"sl2z": 1, "g0_2": 2, "g0_4": 4}[self.value]

    @property
    def index(self) -> int:
        """Index of the group in SL2(Z)"""
        return {"sl2z": 1, "g0_2": 3, "g0_4": 6}[self.value]


class CharacterLabel(str, Enum):
    TRIVIAL = "trivial"
    CHI = "chi"


class SpaceKind(str, Enum):
    """M: all forms, S: cusp forms, Snew / old: the Hecke splitting of S"""

    M = "M"
    S = "S"
    SNEW = "Snew"
    OLD = "old"
