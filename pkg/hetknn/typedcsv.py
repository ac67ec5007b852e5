"""
  Typed CSV codec for heterogeneous matrices

Header cells have the form `name:kind` with kind one of crisp, interval and
fuzzy. Data cells are encoded as
    crisp      0.5891
    interval   [0.31623;0.94868]
    fuzzy      (0.455842;0.569803;0.683763)
    missing    empty field or NaN (any case)
Fields are separated by `,`, components inside a cell by `;`. Whitespace
around fields and components is ignored.
"""
import math
import re

from hetknn.cells import ColumnKind, DataMatrix, MISSING, is_missing, validate


FIELD_SEPARATOR = ','
COMPONENT_SEPARATOR = ';'

BRACKETS = {
    ColumnKind.INTERVAL: ('[', ']'),
    ColumnKind.FUZZY: ('(', ')'),
}

MISSING_LITERAL = 'nan'

CELL_PATTERN = re.compile(r'^([\[(])(.*)([\])])$')
DECIMAL_PATTERN = re.compile(r'[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?', re.ASCII)


class TypedCsvError(ValueError):
    """Malformed document with 1-based position (row 0 is the header)"""
    def __init__(self, row, column, reason):
        self.row = row
        self.column = column
        self.reason = reason
        if row == 0:
            where = 'header'
        else:
            where = 'row %d' % row
        if column is not None:
            where += ', column %d' % column
        super().__init__('%s: %s' % (where, reason))


def parse_header_cell(text, column):
    name, sep, tag = text.strip().rpartition(':')
    if not sep or not name.strip():
        raise TypedCsvError(0, column, 'expected name:kind, got %r' % text)
    try:
        kind = ColumnKind(tag.strip().lower())
    except ValueError:
        raise TypedCsvError(0, column, 'unknown kind %r (expected crisp, interval or fuzzy)' % tag)
    return name.strip(), kind


def parse_real(text):
    if DECIMAL_PATTERN.fullmatch(text) is None:
        raise ValueError('expected decimal number, got %r' % text)
    value = float(text)
    if not math.isfinite(value):
        raise ValueError('non-finite value %r' % text)
    return value


def parse_cell(text, kind):
    """Decode one field of a column of given kind, raise ValueError on failure"""
    text = text.strip()
    if text == '' or text.lower() == MISSING_LITERAL:
        return MISSING
    match = CELL_PATTERN.match(text)
    if kind == ColumnKind.CRISP:
        if match is not None:
            raise ValueError('expected crisp value, got %r' % text)
        return kind.cell_type(parse_real(text))

    opening, closing = BRACKETS[kind]
    if match is None or match.group(1) != opening or match.group(3) != closing:
        raise ValueError('expected %s value %s...%s, got %r' % (kind.value, opening, closing, text))
    parts = match.group(2).split(COMPONENT_SEPARATOR)
    if len(parts) != kind.width:
        raise ValueError('expected %d components of %s value, got %r' % (kind.width, kind.value, text))
    return kind.cell_type(*[parse_real(part.strip()) for part in parts])


def parse(text, check=True):
    """
      Parse typed CSV document into a DataMatrix. With check=True the first
      cell violating its kind invariants is reported as TypedCsvError.
    """
    lines = text.splitlines()
    if len(lines) == 0 or lines[0].strip() == '':
        raise TypedCsvError(0, None, 'missing header')
    header = [parse_header_cell(cell, col + 1)
              for col, cell in enumerate(lines[0].split(FIELD_SEPARATOR))]
    names = [name for name, __ in header]
    schema = [kind for __, kind in header]

    records = lines[1:]
    if len(schema) > 1:
        # a blank line can be a valid record only for single column documents
        while len(records) > 0 and records[-1].strip() == '':
            records.pop()
    if len(records) == 0:
        raise TypedCsvError(1, None, 'no data rows')

    rows = []
    for row_index, line in enumerate(records, start=1):
        fields = line.split(FIELD_SEPARATOR)
        if len(fields) != len(schema):
            raise TypedCsvError(row_index, None, 'expected %d fields, got %d' % (len(schema), len(fields)))
        row = []
        for col_index, (field, kind) in enumerate(zip(fields, schema), start=1):
            try:
                row.append(parse_cell(field, kind))
            except ValueError as e:
                raise TypedCsvError(row_index, col_index, str(e))
        rows.append(row)

    matrix = DataMatrix(rows, schema, names)
    violations = validate(matrix) if check else []
    if len(violations) > 0:
        first = violations[0]
        raise TypedCsvError(first.ref.row + 1, first.ref.col + 1, first.reason)
    return matrix


def format_real(value):
    """Shortest representation which parses back to the identical double"""
    return repr(float(value))


def format_cell(cell, kind):
    if is_missing(cell):
        return ''
    if kind == ColumnKind.CRISP:
        return format_real(cell.value)
    opening, closing = BRACKETS[kind]
    return opening + COMPONENT_SEPARATOR.join(format_real(value) for value in cell) + closing


def serialize(matrix):
    """Canonical typed CSV text of the matrix"""
    for name in matrix.column_names:
        assert name and name == name.strip(), name
        assert FIELD_SEPARATOR not in name and '\n' not in name, name
    lines = [FIELD_SEPARATOR.join('%s:%s' % (name, kind.value)
                                  for name, kind in zip(matrix.column_names, matrix.schema))]
    for row in matrix.rows:
        lines.append(FIELD_SEPARATOR.join(format_cell(cell, kind)
                                          for cell, kind in zip(row, matrix.schema)))
    return '\n'.join(lines) + '\n'


def load(filename, check=True):
    with open(filename) as f:
        return parse(f.read(), check=check)


def save(matrix, filename):
    with open(filename, 'w', newline='') as f:
        f.write(serialize(matrix))

# vim: expandtab sw=4 ts=4
