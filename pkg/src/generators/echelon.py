"""
Reduced row-echelon forms of q-expansion lists

Rows are sparse maps twice-exponent -> Fraction. Columns are ordered by
increasing twice-exponent, so the pivot of a row is its smallest supported
key, leading coefficients are 1 and every pivot column is zero in all other
rows. The reduced basis of a span at a given precision is therefore unique
and spans compare by equality.
"""
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.exactseries import Grid, QExpansion, truncate
from src.utils.errors import GridError

Row = Dict[int, Fraction]


def _to_qq(c):
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def _common(series: Sequence[QExpansion], precision: Optional[int]):
    grids = {f.grid for f in series}
    if len(grids) > 1:
        raise GridError("Cannot echelonize series on different grids")
    common = min(f.precision for f in series)
    if precision is not None:
        common = min(common, precision)
    return grids.pop(), common


def reduce_rows(rows: Sequence[Row]) -> Dict[int, Row]:
    """
    Reduced echelon form of sparse rows over QQ

    Returns:
        Mapping pivot -> normalized row, by increasing pivot
    """
    columns = sorted({m for row in rows for m in row})
    if not columns:
        return {}
    index = {m: j for j, m in enumerate(columns)}
    entries = {i: {index[m]: _to_qq(c) for m, c in row.items() if c} for i, row in enumerate(rows)}
    matrix = DomainMatrix({i: cols for i, cols in entries.items() if cols}, (len(rows), len(columns)), QQ)
    reduced, pivots = matrix.rref()
    dense = reduced.to_list()
    result: Dict[int, Row] = {}
    for i, j in enumerate(pivots):
        result[columns[j]] = {
            columns[col]: Fraction(int(v.numerator), int(v.denominator)) for col, v in enumerate(dense[i]) if v
        }
    return result


def echelon(series: Sequence[QExpansion], precision: Optional[int] = None) -> List[QExpansion]:
    """
    Reduced row-echelon basis of the span of series

    Args:
        series: Expansions on a common grid
        precision: Optional further truncation

    Returns:
        Basis ordered by increasing pivot, all at the common precision
    """
    if not series:
        return []
    grid, common = _common(series, precision)
    rows = [{m: c for m, c in f.items() if m < common} for f in series]
    return [QExpansion(grid, common, row) for row in reduce_rows(rows).values()]


def coordinates(basis: Sequence[QExpansion], f: QExpansion) -> Optional[List[Fraction]]:
    """
    Coordinates of f in a reduced echelon basis, None if f is not in the span

    Coordinates are read at the pivots; the residual is then checked at the
    common precision of f and the basis.
    """
    if not basis:
        return [] if f.is_zero() else None
    if f.grid is not basis[0].grid:
        if f.grid is Grid.INTEGER and basis[0].grid is Grid.HALF:
            f = QExpansion(Grid.HALF, f.precision, f.coeffs)
        else:
            return None
    residual = truncate(f, min(f.precision, basis[0].precision))
    coords = []
    for row in basis:
        c = residual[row.valuation()]
        coords.append(c)
        if c:
            residual = residual - c * row
    return coords if residual.is_zero() else None


def in_span(basis: Sequence[QExpansion], f: QExpansion) -> bool:
    return coordinates(basis, f) is not None


def contains(outer: Sequence[QExpansion], inner: Sequence[QExpansion]) -> bool:
    """Span containment inner <= outer"""
    return all(in_span(outer, f) for f in inner)


def span_equal(a: Sequence[QExpansion], b: Sequence[QExpansion]) -> bool:
    """Compare two spans by their reduced echelon bases at the common precision"""
    if len(a) != len(b):
        return False
    if not a:
        return True
    common = min(a[0].precision, b[0].precision)
    left = echelon(list(a), common)
    right = echelon(list(b), common)
    return [f.coeffs for f in left] == [f.coeffs for f in right]
