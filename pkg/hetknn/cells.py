"""
  Cell values, column kinds and the heterogeneous data matrix
"""
import math
from enum import Enum
from typing import NamedTuple


class Crisp(NamedTuple):
    value: float


class Interval(NamedTuple):
    lower: float
    upper: float


class FuzzyTFN(NamedTuple):
    """Triangular fuzzy number (a1, a2, a3) with peak at a2"""
    a1: float
    a2: float
    a3: float


MISSING = None  # unobserved cell, NaN in the source data


def is_missing(cell):
    return cell is MISSING


class ColumnKind(Enum):
    CRISP = 'crisp'
    INTERVAL = 'interval'
    FUZZY = 'fuzzy'

    @property
    def cell_type(self):
        return CELL_TYPES[self]

    @property
    def width(self):
        """Number of real components of a cell"""
        return len(self.cell_type._fields)

    def matches(self, cell):
        return type(cell) is self.cell_type


CELL_TYPES = {
    ColumnKind.CRISP: Crisp,
    ColumnKind.INTERVAL: Interval,
    ColumnKind.FUZZY: FuzzyTFN,
}


class CellRef(NamedTuple):
    row: int
    col: int


class Violation(NamedTuple):
    ref: CellRef
    reason: str

    @property
    def message(self):
        return '%s at (%d,%d)' % (self.reason, self.ref.row, self.ref.col)

    def __str__(self):
        return self.message


class DataMatrix:
    """
       Rectangular n x m grid of cells with one declared kind per column.

       The grid is stored as tuples and never modified; use `replace()` to
       derive a matrix with different cells.
    """
    def __init__(self, rows, schema, column_names=None):
        self.rows = tuple(tuple(row) for row in rows)
        self.schema = tuple(ColumnKind(kind) for kind in schema)
        if column_names is None:
            column_names = ['c%d' % (col + 1) for col in range(len(self.schema))]
        self.column_names = tuple(column_names)

        assert len(self.rows) >= 1, self.rows
        assert len(self.schema) >= 1, self.schema
        assert len(self.column_names) == len(self.schema), (self.column_names, self.schema)
        for row in self.rows:
            assert len(row) == len(self.schema), (row, self.schema)  # ragged grid

    @property
    def n(self):
        return len(self.rows)

    @property
    def m(self):
        return len(self.schema)

    @property
    def shape(self):
        return self.n, self.m

    def __getitem__(self, ref):
        row, col = ref
        return self.rows[row][col]

    def cells(self):
        """Generate (CellRef, cell) pairs in row-major order"""
        for i, row in enumerate(self.rows):
            for l, cell in enumerate(row):
                yield CellRef(i, l), cell

    def column(self, col):
        return [row[col] for row in self.rows]

    def replace(self, updates):
        """Return new matrix with cells given by {CellRef: cell} replaced"""
        rows = [list(row) for row in self.rows]
        for (i, l), cell in updates.items():
            rows[i][l] = cell
        return DataMatrix(rows, self.schema, self.column_names)

    def is_complete(self):
        return all(not is_missing(cell) for __, cell in self.cells())

    def __eq__(self, other):
        if not isinstance(other, DataMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.schema == other.schema
                and self.column_names == other.column_names)

    def __hash__(self):
        return hash((self.rows, self.schema, self.column_names))

    def __repr__(self):
        return 'DataMatrix(%r, schema=%r)' % (self.rows, [kind.value for kind in self.schema])


def _cell_violation(cell, kind):
    if not kind.matches(cell):
        got = type(cell).__name__
        return 'kind mismatch (expected %s, got %s)' % (kind.value, got)
    for value in cell:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            return 'non-real component %r' % (value,)
        if not math.isfinite(value):
            return 'non-finite component %r' % (value,)
    if kind == ColumnKind.INTERVAL and cell.lower > cell.upper:
        return 'lower > upper'
    if kind == ColumnKind.FUZZY and not (cell.a1 <= cell.a2 <= cell.a3):
        return 'a1 <= a2 <= a3 violated'
    return None


def validate(matrix):
    """Return list of invariant violations, empty for valid matrix"""
    ret = []
    for ref, cell in matrix.cells():
        if is_missing(cell):
            continue
        reason = _cell_violation(cell, matrix.schema[ref.col])
        if reason is not None:
            ret.append(Violation(ref, reason))
    return ret


def missing_cells(matrix):
    """References of all Missing cells in row-major order"""
    return [ref for ref, cell in matrix.cells() if is_missing(cell)]

# vim: expandtab sw=4 ts=4
