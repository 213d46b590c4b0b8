"""
Exception hierarchy shared by every module of the workbench
"""


class ModularFormsError(Exception):
    """Base class for all workbench errors"""


# Series arithmetic
class GridError(ModularFormsError):
    """Operands live on different exponent grids, or a key is illegal for the grid"""


class NonRealMultiplier(ModularFormsError):
    """A translation would multiply some coefficient by a non-real root of unity"""


class PrefactorNotOnGrid(ModularFormsError):
    """An eta quotient's leading exponent is negative or not a multiple of 1/2"""


# Spaces and operators
class UnsupportedWeight(ModularFormsError):
    """No construction is available for the requested weight"""


class OddWeight(UnsupportedWeight):
    """Weights must be even positive integers"""


class UnsupportedSpace(ModularFormsError):
    """The (group, character, kind) combination is not built by this workbench"""


class PrimeDividesLevel(ModularFormsError):
    """T_p was requested for a prime dividing the level"""


class PrecisionError(ModularFormsError):
    """Precision or capacity problems (command-line exit code 3)"""


class InsufficientPrecision(PrecisionError):
    """Not enough coefficients to determine the requested object exactly"""


class DimensionMismatch(PrecisionError):
    """A computed rank disagrees with its closed-form dimension"""


class SeparationFailure(ModularFormsError):
    """No Hecke combination separated the old and new characteristic polynomials"""


class NotInvariant(ModularFormsError):
    """An operator image left the target span"""


# Group words
class NonUnimodular(ModularFormsError):
    """Matrix determinant is not 1"""


class NotInGroup(ModularFormsError):
    """Matrix is not in the requested congruence subgroup"""


class WordParseError(ModularFormsError):
    """Text could not be parsed as a matrix or a word"""


# Numerics
class NotInUpperHalfPlane(ModularFormsError):
    """Evaluation point has non-positive imaginary part"""


class SingularMatrix(ModularFormsError):
    """Slash operator needs a matrix of positive determinant"""


class OutsideConvergenceRegion(ModularFormsError):
    """Dirichlet series evaluated where absolute convergence is not guaranteed"""
