"""
  Benchmark of the imputation: random masking, error measure and box-plot
  statistics over sweeps of k and of the number of masked cells
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import NamedTuple

import numpy as np

from hetknn.cells import CellRef, MISSING, is_missing
from hetknn.distances import cell_distance
from hetknn.imputer import impute
from hetknn.lib.serialize import pack_records, unpack_records


MASK_MODES = ('rows', 'column')

SAMPLES_HEADER = 'k,missing_count,trial,error,imputable'
SUMMARY_HEADER = 'k,min,q1,median,q3,max,mean'
COUNT_SUMMARY_HEADER = 'k,missing_count,min,q1,median,q3,max,mean'


class MaskPattern(NamedTuple):
    refs: tuple
    seed: int
    mode: str = 'rows'


class TrialRecord(NamedTuple):
    k: int
    missing_count: int
    trial: int
    error: float  # None for trials with unimputable cells
    imputable: bool


class BoxSummary(NamedTuple):
    min: float
    q1: float
    median: float
    q3: float
    max: float
    mean: float
    count: int


def mask_random(matrix, count, seed, mode='rows'):
    """
      Replace `count` randomly chosen cells of a complete matrix by Missing.

      In 'rows' mode every masked cell lies in a different row and its column
      is chosen independently; in 'column' mode the rows are still distinct
      but all cells share one randomly chosen column.
    """
    assert mode in MASK_MODES, (mode, MASK_MODES)
    assert 0 <= count <= matrix.n, (count, matrix.n)
    assert matrix.is_complete()
    rng = np.random.default_rng(seed)
    rows = sorted(rng.choice(matrix.n, size=count, replace=False).tolist())
    if mode == 'rows':
        cols = rng.integers(matrix.m, size=count).tolist()
    else:
        cols = [int(rng.integers(matrix.m))] * count
    refs = tuple(CellRef(i, l) for i, l in zip(rows, cols))
    masked = matrix.replace({ref: MISSING for ref in refs})
    return masked, MaskPattern(refs, seed, mode)


def cell_error(original, imputed, kind):
    assert not is_missing(original) and not is_missing(imputed), (original, imputed)
    return cell_distance(original, imputed, kind)


def matrix_error(original, imputed):
    """
      Mean cell distance over all n*m cells; cells which were never masked
      are identical and contribute zero.
    """
    assert original.shape == imputed.shape, (original.shape, imputed.shape)
    assert original.schema == imputed.schema, (original.schema, imputed.schema)
    errors = [cell_error(cell, imputed[ref], original.schema[ref.col])
              for ref, cell in original.cells()]
    return math.fsum(errors) / (original.n * original.m)


def trial_seed(seed, k, count, trial):
    """Seed of one trial derived from the benchmark seed and trial coordinates"""
    sequence = np.random.SeedSequence([seed, k, count, trial])
    return int(sequence.generate_state(1)[0])


def run_trial(matrix, seed, mode, coords):
    k, count, trial = coords
    masked, pattern = mask_random(matrix, count, trial_seed(seed, k, count, trial), mode=mode)
    result = impute(masked, k)
    if len(result.unimputable) > 0:
        return TrialRecord(k, count, trial, None, False)
    return TrialRecord(k, count, trial, matrix_error(matrix, result.matrix), True)


def summarize(samples):
    """Box-plot statistics, quartiles linearly interpolated; None for no samples"""
    if len(samples) == 0:
        return None
    values = np.percentile(np.asarray(samples, dtype=float), [0, 25, 50, 75, 100])
    mean = math.fsum(samples) / len(samples)
    return BoxSummary(*[float(value) for value in values], mean=mean, count=len(samples))


class BenchmarkReport:
    """
       Collection of trial records with derived error samples and summaries.

       samples    {(k, missing_count): (error, ...)} - imputable trials only
       excluded   {(k, missing_count): number of trials with unimputable cells}
       summaries  {(k, missing_count): BoxSummary or None}
       per_k      {k: BoxSummary or None} - all missing counts together
    """
    def __init__(self, dataset_name, trials):
        self.dataset_name = dataset_name
        self.trials = tuple(sorted(trials))
        samples, excluded = {}, {}
        for record in self.trials:
            key = (record.k, record.missing_count)
            samples.setdefault(key, [])
            excluded.setdefault(key, 0)
            if record.imputable:
                samples[key].append(record.error)
            else:
                excluded[key] += 1
        self.samples = {key: tuple(values) for key, values in samples.items()}
        self.excluded = excluded
        self.summaries = {key: summarize(values) for key, values in self.samples.items()}
        per_k = {}
        for (k, __), values in sorted(self.samples.items()):
            per_k.setdefault(k, []).extend(values)
        self.per_k = {k: summarize(values) for k, values in per_k.items()}

    def __eq__(self, other):
        if not isinstance(other, BenchmarkReport):
            return NotImplemented
        return self.dataset_name == other.dataset_name and self.trials == other.trials

    def __repr__(self):
        return 'BenchmarkReport(%r, %d trials)' % (self.dataset_name, len(self.trials))


def benchmark(matrix, k_values, missing_counts, trials, seed, mode='rows', jobs=1, dataset_name=''):
    """
      Mask, impute and measure the error `trials` times for every combination
      of k and number of masked cells. The result depends only on the
      arguments (jobs included); jobs > 1 runs trials in worker processes.
    """
    assert matrix.is_complete()
    assert trials >= 1, trials
    for k in k_values:
        assert k >= 1, k
    for count in missing_counts:
        assert 0 <= count <= matrix.n, (count, matrix.n)
    coords = [(k, count, trial) for k in k_values for count in missing_counts for trial in range(trials)]
    task = partial(run_trial, matrix, seed, mode)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            records = list(executor.map(task, coords, chunksize=max(1, len(coords) // (4 * jobs))))
    else:
        records = [task(item) for item in coords]

    report = BenchmarkReport(dataset_name, {(r.k, r.missing_count, r.trial): r for r in records}.values())
    for (k, count), summary in sorted(report.summaries.items()):
        logging.info('k=%d missing=%d mean error %s', k, count, summary.mean if summary else None)
        if report.excluded[(k, count)] > 0:
            logging.warning('k=%d missing=%d: %d trials with unimputable cells excluded',
                            k, count, report.excluded[(k, count)])
    return report


def format_samples(report):
    lines = [SAMPLES_HEADER]
    for r in report.trials:
        error = '' if r.error is None else repr(r.error)
        lines.append('%d,%d,%d,%s,%d' % (r.k, r.missing_count, r.trial, error, int(r.imputable)))
    return '\n'.join(lines) + '\n'


def _format_summary(summary):
    if summary is None:
        return ',,,,,'
    return ','.join(repr(value) for value in summary[:6])


def format_summary(report, by_count=False):
    lines = [SUMMARY_HEADER]
    for k, summary in sorted(report.per_k.items()):
        lines.append('%d,%s' % (k, _format_summary(summary)))
    if by_count:
        lines.extend(['', COUNT_SUMMARY_HEADER])
        for (k, count), summary in sorted(report.summaries.items()):
            lines.append('%d,%d,%s' % (k, count, _format_summary(summary)))
    return '\n'.join(lines) + '\n'


def save_report(report, filename):
    with open(filename, 'wb') as f:
        f.write(pack_records(report.dataset_name, report.trials))


def load_report(filename):
    with open(filename, 'rb') as f:
        dataset_name, trials = unpack_records(f.read(), TrialRecord)
    return BenchmarkReport(dataset_name, trials)

# vim: expandtab sw=4 ts=4
