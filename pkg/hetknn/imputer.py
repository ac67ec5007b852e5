"""
  Weighted k-nearest neighbor imputation of heterogeneous matrices
"""
import logging
import math
from typing import NamedTuple

from hetknn.cells import CellRef, is_missing, missing_cells, validate
from hetknn.distances import row_distance, INCOMPARABLE


ZERO_DISTANCE = 1e-12  # donors closer than this are exact matches


class Donor(NamedTuple):
    row: int
    distance: float
    weight: float


class NeighborSet(NamedTuple):
    target: CellRef
    donors: tuple


class ImputationResult(NamedTuple):
    matrix: object  # completed DataMatrix
    trace: dict  # CellRef -> NeighborSet
    unimputable: tuple


def neighbor_weights(distances):
    """
      Normalized inverse distance weights. Donors at (numerically) zero
      distance share the whole weight uniformly. Infinite distance (overflow
      of far apart cells) gets weight 0 unless all donors are infinitely far.
    """
    assert len(distances) > 0, distances
    for dist in distances:
        assert not math.isnan(dist) and dist >= 0, distances
    uniform = [dist < ZERO_DISTANCE for dist in distances]
    if not any(uniform) and all(math.isinf(dist) for dist in distances):
        uniform = [True] * len(distances)
    if any(uniform):
        share = 1.0 / sum(uniform)
        return [share if is_shared else 0.0 for is_shared in uniform]
    inverse = [1.0 / dist for dist in distances]  # 1/inf == 0
    total = math.fsum(inverse)
    return [inv / total for inv in inverse]


def find_neighbors(matrix, target, k):
    """
      Select up to k donors for the Missing cell `target`.

      Candidates are rows observed in the target column with a defined row
      distance to the target row. Ties are resolved by lower row index.
    """
    assert k >= 1, k
    assert is_missing(matrix[target]), (target, matrix[target])
    candidates = []
    for j in range(matrix.n):
        if j == target.row or is_missing(matrix[j, target.col]):
            continue
        dist = row_distance(matrix, target.row, j)
        if dist is INCOMPARABLE:
            continue
        candidates.append((dist.value, j))
    candidates.sort()
    selected = candidates[:k]
    if len(selected) == 0:
        return NeighborSet(target, ())
    weights = neighbor_weights([dist for dist, __ in selected])
    donors = tuple(Donor(j, dist, weight) for (dist, j), weight in zip(selected, weights))
    return NeighborSet(target, donors)


def _clip(value, values):
    return min(max(value, min(values)), max(values))


def combine_cells(donors, kind):
    """
      Weighted component-wise combination of donor cells given as
      (cell, weight) pairs. The result stays within the donors' range.
    """
    assert len(donors) > 0, donors
    for cell, weight in donors:
        assert not is_missing(cell) and kind.matches(cell), (cell, kind)
    components = []
    for index in range(kind.width):
        values = [cell[index] for cell, __ in donors]
        value = math.fsum(cell[index] * weight for cell, weight in donors)
        components.append(_clip(value, values))
    return kind.cell_type(*components)


def impute_cell(matrix, target, k):
    """Return (NeighborSet, imputed cell or None) for one Missing cell"""
    neighbors = find_neighbors(matrix, target, k)
    if len(neighbors.donors) == 0:
        return neighbors, None
    donors = [(matrix[donor.row, target.col], donor.weight) for donor in neighbors.donors]
    return neighbors, combine_cells(donors, matrix.schema[target.col])


def impute(matrix, k):
    """
      Impute every Missing cell of the matrix.

      Donors are always taken from the input matrix, i.e. values imputed in
      this pass never serve as donors and the cell order does not matter.
    """
    assert k >= 1, k
    violations = validate(matrix)
    assert len(violations) == 0, violations
    trace, updates, unimputable = {}, {}, []
    for target in missing_cells(matrix):
        neighbors, cell = impute_cell(matrix, target, k)
        if cell is None:
            logging.warning('no donor for cell (%d,%d)', target.row, target.col)
            unimputable.append(target)
            continue
        logging.debug('cell (%d,%d) <- %s from rows %s', target.row, target.col, cell,
                      [donor.row for donor in neighbors.donors])
        trace[target] = neighbors
        updates[target] = cell
    return ImputationResult(matrix.replace(updates), trace, tuple(unimputable))

# vim: expandtab sw=4 ts=4
