"""
  Embedded case study matrices and synthetic benchmark data
"""
import math

import numpy as np

from hetknn.cells import ColumnKind, DataMatrix
from hetknn.typedcsv import parse


# normalized decision matrix, 3x3
CASE1 = """\
c1:crisp,c2:interval,c3:fuzzy
0.5891,[0.31623;0.94868],(0.455842;0.569803;0.683763)
0.5624,[0.55470;0.83205],(0.371391;0.557086;0.742781)
0.5802,[0.55470;0.83205],(0.491539;0.573462;0.655386)
"""

# multi-criteria decision making matrix, 4x4
CASE2 = """\
c1:crisp,c2:fuzzy,c3:fuzzy,c4:interval
0.47,(0.32;0.48;0.71),(0.52;0.67;0.87),[0.40;0.55]
0.58,(0.16;0.29;0.47),(0.26;0.37;0.52),[0.41;0.58]
0.42,(0.49;0.67;0.94),(0.39;0.52;0.70),[0.37;0.54]
0.51,(0.32;0.48;0.71),(0.26;0.37;0.52),[0.50;0.69]
"""

# multi-attribute decision matrix, 5x3
CASE3 = """\
c1:crisp,c2:interval,c3:fuzzy
0.45,[0.60;0.80],(0.42;0.57;0.71)
0.41,[0.37;0.93],(0.27;0.53;0.80)
0.48,[0.32;0.95],(0.46;0.57;0.68)
0.43,[0.55;0.83],(0.37;0.56;0.74)
0.46,[0.20;0.98],(0.49;0.57;0.66)
"""

all_fixtures = dict(case1=CASE1, case2=CASE2, case3=CASE3)


class UnknownFixtureError(KeyError):
    pass


def fixture(name):
    if name not in all_fixtures:
        raise UnknownFixtureError('unknown fixture %r, available: %s' % (name, ', '.join(sorted(all_fixtures))))
    return parse(all_fixtures[name])


def synthetic_matrix(rows=80, columns=4, kind=ColumnKind.CRISP, duplication=1, seed=0):
    """
      Matrix of smooth, mutually correlated columns of a single kind.

      All columns are noisy periodic functions of one hidden variable, scaled
      into [0, 1]. Every generated base row is repeated `duplication` times
      (consecutive rows), so duplication=rows yields identical rows.
    """
    kind = ColumnKind(kind)
    assert rows >= 1 and columns >= 1, (rows, columns)
    assert 1 <= duplication <= rows, (duplication, rows)
    rng = np.random.default_rng(seed)
    base_count = math.ceil(rows / duplication)

    hidden = np.sort(rng.uniform(size=base_count))
    phases = rng.uniform(0.0, math.pi, size=columns)
    frequencies = 1.0 + 0.5 * np.arange(columns)
    centers = 0.5 + 0.4 * np.sin(math.pi * np.outer(hidden, frequencies) + phases)
    centers += rng.normal(scale=0.01, size=centers.shape)
    spreads = 0.02 + 0.08 * rng.uniform(size=(base_count, columns, 2))

    if kind == ColumnKind.CRISP:
        components = [centers]
    elif kind == ColumnKind.INTERVAL:
        components = [centers - spreads[:, :, 0], centers + spreads[:, :, 1]]
    else:
        components = [centers - spreads[:, :, 0], centers, centers + spreads[:, :, 1]]
    components = np.clip(np.stack(components, axis=-1), 0.0, 1.0)
    components = np.repeat(components, duplication, axis=0)[:rows]

    data = [[kind.cell_type(*cell) for cell in row] for row in components.tolist()]
    return DataMatrix(data, [kind] * columns)

# vim: expandtab sw=4 ts=4
