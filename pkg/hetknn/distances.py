"""
  Distances of crisp, interval and fuzzy cells and of partially observed rows
"""
import math
import sys
from typing import NamedTuple

from hetknn.cells import ColumnKind, is_missing


INCOMPARABLE = None  # rows without any mutually observed column

SMALLEST_DISTANCE = sys.float_info.min * sys.float_info.epsilon  # smallest subnormal double


class RowDistance(NamedTuple):
    value: float
    shared_features: int


def _kept_positive(value, total):
    """value derived from total, positive whenever total is (no underflow to 0)"""
    if value == 0.0 and total > 0.0:
        return SMALLEST_DISTANCE
    return value


def crisp_distance(a, b):
    return abs(a - b)


def interval_distance(a, b):
    """Half of the Euclidean distance of the (lower, upper) end points"""
    total = math.hypot(a.lower - b.lower, a.upper - b.upper)
    return _kept_positive(0.5 * total, total)


def tfn_membership(t, x):
    """Membership degree of x in triangular fuzzy number t"""
    a1, a2, a3 = t
    if x == a2:
        return 1.0
    if a1 < x < a2:
        return (x - a1) / (a2 - a1)
    if a2 < x < a3:
        return (a3 - x) / (a3 - a2)
    return 0.0


def tfn_distance(a, b):
    total = abs(a.a1 - b.a1) + abs(a.a2 - b.a2) + abs(a.a3 - b.a3)
    return _kept_positive(total / 3.0, total)


def _crisp_cell_distance(a, b):
    return crisp_distance(a.value, b.value)


KIND_DISTANCE = {
    ColumnKind.CRISP: _crisp_cell_distance,
    ColumnKind.INTERVAL: interval_distance,
    ColumnKind.FUZZY: tfn_distance,
}


def cell_distance(a, b, kind):
    assert not is_missing(a) and not is_missing(b), (a, b)
    assert kind.matches(a) and kind.matches(b), (a, b, kind)
    return KIND_DISTANCE[kind](a, b)


def column_distances(matrix, i, j):
    """
      List of per-column cell distances of rows i and j, None for columns
      where at least one of the rows is missing.
    """
    assert 0 <= i < matrix.n and 0 <= j < matrix.n, (i, j, matrix.n)
    assert i != j, i
    ret = []
    for kind, a, b in zip(matrix.schema, matrix.rows[i], matrix.rows[j]):
        if is_missing(a) or is_missing(b):
            ret.append(None)
        else:
            ret.append(cell_distance(a, b, kind))
    return ret


def row_distance(matrix, i, j):
    """
      Square root of the mean cell distance over mutually observed columns.

      The cell distances are averaged directly (not squared), so for a crisp
      column the summand is |a - b|. Returns INCOMPARABLE when rows i and j
      share no observed column.
    """
    shared = [dist for dist in column_distances(matrix, i, j) if dist is not None]
    if len(shared) == 0:
        return INCOMPARABLE
    return RowDistance(math.sqrt(math.fsum(shared) / len(shared)), len(shared))

# vim: expandtab sw=4 ts=4
