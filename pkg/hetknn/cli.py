"""
  Command line interface

example:
    hetknn fixtures --output-dir data
    hetknn impute --input data/case1.csv --output completed.csv --k 2
    hetknn benchmark --fixture case3 --k-min 1 --k-max 4 --nan-min 1 --nan-max 5 \
        --trials 200 --seed 7 --output case3.csv
"""
import argparse
import logging
import os
import sys

from hetknn import typedcsv
from hetknn.cells import ColumnKind, validate
from hetknn.distances import column_distances, row_distance, INCOMPARABLE
from hetknn.evaluation import (benchmark, format_samples, format_summary, save_report,
                               MASK_MODES)
from hetknn.fixtures import all_fixtures, fixture, synthetic_matrix
from hetknn.imputer import impute
from hetknn.lib.config import load as config_load, benchmark_options, MergeConflictError


EXIT_OK = 0
EXIT_DATA_ERROR = 1

TRACE_HEADER = 'target_row,target_col,donor_row,distance,weight'


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('positive integer expected, got %s' % text)
    return value


def non_negative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError('non-negative integer expected, got %s' % text)
    return value


def row_pair(text):
    try:
        i, j = [int(index) for index in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('expected two row indices i,j, got %r' % text)
    return i, j


def report_error(message):
    print('error:', message, file=sys.stderr)


def write_text(filename, text):
    with open(filename, 'w', newline='') as f:
        f.write(text)


def load_input(filename, check=True):
    """Return matrix or None with the problem reported on stderr"""
    try:
        return typedcsv.load(filename, check=check)
    except OSError as e:
        report_error('cannot read %s: %s' % (filename, e))
    except typedcsv.TypedCsvError as e:
        report_error('%s: %s' % (filename, e))
    return None


def cmd_impute(args, parser):
    matrix = load_input(args.input)
    if matrix is None:
        return EXIT_DATA_ERROR
    result = impute(matrix, args.k)
    write_text(args.output, typedcsv.serialize(result.matrix))
    if args.trace is not None:
        lines = [TRACE_HEADER]
        for target, neighbors in sorted(result.trace.items()):
            for donor in neighbors.donors:
                lines.append('%d,%d,%d,%r,%r' % (target.row, target.col, donor.row,
                                                 donor.distance, donor.weight))
        write_text(args.trace, '\n'.join(lines) + '\n')
    for ref in result.unimputable:
        report_error('unimputable cell: row %d, column %d' % (ref.row + 1, ref.col + 1))
    if len(result.unimputable) > 0:
        return EXIT_DATA_ERROR
    return EXIT_OK


def benchmark_source(options):
    """Return (dataset name, matrix), matrix is None for unreadable input"""
    if options.get('input') is not None:
        return options['input'], load_input(options['input'])
    if options.get('fixture') is not None:
        return options['fixture'], fixture(options['fixture'])
    matrix = synthetic_matrix(rows=options['rows'], columns=options['columns'],
                              kind=options['synthetic'], duplication=options['duplication'],
                              seed=options['seed'])
    return 'synthetic-' + options['synthetic'], matrix


def cmd_benchmark(args, parser):
    try:
        config = config_load(*args.config) if args.config else {}
    except (OSError, ValueError, AssertionError, MergeConflictError) as e:
        parser.error('invalid configuration: %s' % e)
    overrides = {key: getattr(args, key) for key in [
        'k_min', 'k_max', 'nan_min', 'nan_max', 'trials', 'seed', 'mask_mode', 'jobs',
        'rows', 'columns', 'duplication']}
    sources = {key: getattr(args, key) for key in ['input', 'fixture', 'synthetic']}
    options = benchmark_options(config, overrides)
    if any(value is not None for value in sources.values()):
        options.update(sources)  # command line source replaces configured one
    if sum(options.get(key) is not None for key in sources) != 1:
        parser.error('exactly one of --input, --fixture and --synthetic is required')
    if options.get('fixture') is not None and options['fixture'] not in all_fixtures:
        parser.error('unknown fixture %r, available: %s' % (options['fixture'], ', '.join(sorted(all_fixtures))))
    if options.get('synthetic') is not None:
        if options['synthetic'] not in [kind.value for kind in ColumnKind]:
            parser.error('unknown synthetic kind %r' % options['synthetic'])
        if not 1 <= options['duplication'] <= options['rows']:
            parser.error('--duplication must be within 1..%d' % options['rows'])
    if options['mask_mode'] not in MASK_MODES:
        parser.error('unknown mask mode %r' % options['mask_mode'])

    name, matrix = benchmark_source(options)
    if matrix is None:
        return EXIT_DATA_ERROR
    if not matrix.is_complete():
        report_error('benchmark requires complete input matrix')
        return EXIT_DATA_ERROR
    if not 1 <= options['k_min'] <= options['k_max']:
        parser.error('invalid k range %d..%d' % (options['k_min'], options['k_max']))
    if not 0 <= options['nan_min'] <= options['nan_max']:
        parser.error('invalid missing count range %d..%d' % (options['nan_min'], options['nan_max']))
    if options['nan_max'] > matrix.n:
        parser.error('--nan-max %d exceeds number of rows %d' % (options['nan_max'], matrix.n))
    if options['trials'] < 1 or options['jobs'] < 1:
        parser.error('--trials and --jobs must be positive')

    report = benchmark(matrix,
                       k_values=range(options['k_min'], options['k_max'] + 1),
                       missing_counts=range(options['nan_min'], options['nan_max'] + 1),
                       trials=options['trials'], seed=options['seed'],
                       mode=options['mask_mode'], jobs=options['jobs'], dataset_name=name)
    summary_filename = args.summary
    if summary_filename is None:
        root, ext = os.path.splitext(args.output)
        summary_filename = root + '-summary' + (ext or '.csv')
    write_text(args.output, format_samples(report))
    summary = format_summary(report, by_count=args.by_count)
    write_text(summary_filename, summary)
    if args.archive is not None:
        save_report(report, args.archive)
    sys.stdout.write(summary)
    return EXIT_OK


def cmd_distance(args, parser):
    matrix = load_input(args.input)
    if matrix is None:
        return EXIT_DATA_ERROR
    i, j = args.rows
    if i == j or not (0 <= i < matrix.n and 0 <= j < matrix.n):
        parser.error('rows must be two different indices within 0..%d' % (matrix.n - 1))
    for name, kind, dist in zip(matrix.column_names, matrix.schema, column_distances(matrix, i, j)):
        print('column %s (%s): %s' % (name, kind.value, 'missing' if dist is None else repr(dist)))
    dist = row_distance(matrix, i, j)
    if dist is INCOMPARABLE:
        print('incomparable')
    else:
        print('distance %r' % dist.value)
        print('shared_features %d' % dist.shared_features)
    return EXIT_OK


def cmd_validate(args, parser):
    matrix = load_input(args.input, check=False)
    if matrix is None:
        return EXIT_DATA_ERROR
    violations = validate(matrix)
    for violation in violations:
        print('row %d, column %d: %s' % (violation.ref.row + 1, violation.ref.col + 1, violation.reason))
    if len(violations) > 0:
        return EXIT_DATA_ERROR
    print('valid %dx%d matrix' % matrix.shape)
    return EXIT_OK


def cmd_fixtures(args, parser):
    names = sorted(all_fixtures) if args.name is None else [args.name]
    if args.output_dir is None:
        for name in names:
            matrix = fixture(name)
            print('%s %dx%d %s' % (name, matrix.n, matrix.m, ','.join(kind.value for kind in matrix.schema)))
        return EXIT_OK
    os.makedirs(args.output_dir, exist_ok=True)
    for name in names:
        write_text(os.path.join(args.output_dir, name + '.csv'), typedcsv.serialize(fixture(name)))
    return EXIT_OK


def create_parser():
    parser = argparse.ArgumentParser(prog='hetknn',
                                     description='k-nearest neighbor imputation of crisp, interval and fuzzy data')
    parser.add_argument('--verbose', '-v', help='verbose mode', action='store_true')
    subparsers = parser.add_subparsers(help='sub-command help', dest='command')
    subparsers.required = True

    parser_impute = subparsers.add_parser('impute', help='impute missing cells')
    parser_impute.add_argument('--input', required=True, help='typed CSV file with missing cells')
    parser_impute.add_argument('--output', required=True, help='completed typed CSV file')
    parser_impute.add_argument('--k', type=positive_int, required=True, help='number of nearest neighbors')
    parser_impute.add_argument('--trace', help='write donor rows, distances and weights')
    parser_impute.set_defaults(func=cmd_impute, parser=parser_impute)

    parser_benchmark = subparsers.add_parser('benchmark', help='masking and error benchmark')
    source = parser_benchmark.add_mutually_exclusive_group()
    source.add_argument('--input', help='complete typed CSV file')
    source.add_argument('--fixture', help='embedded matrix (%s)' % ', '.join(sorted(all_fixtures)))
    source.add_argument('--synthetic', help='generated matrix of given kind (crisp, interval, fuzzy)')
    parser_benchmark.add_argument('--config', nargs='+', help='JSON configuration file(s)')
    parser_benchmark.add_argument('--k-min', type=positive_int)
    parser_benchmark.add_argument('--k-max', type=positive_int)
    parser_benchmark.add_argument('--nan-min', type=non_negative_int, help='minimal number of masked cells')
    parser_benchmark.add_argument('--nan-max', type=non_negative_int, help='maximal number of masked cells')
    parser_benchmark.add_argument('--trials', type=positive_int, help='repetitions per (k, count)')
    parser_benchmark.add_argument('--seed', type=non_negative_int, help='random generator seed')
    parser_benchmark.add_argument('--mask-mode', choices=MASK_MODES)
    parser_benchmark.add_argument('--jobs', type=positive_int, help='number of worker processes')
    parser_benchmark.add_argument('--rows', type=positive_int, help='rows of synthetic matrix')
    parser_benchmark.add_argument('--columns', type=positive_int, help='columns of synthetic matrix')
    parser_benchmark.add_argument('--duplication', type=positive_int, help='copies of each synthetic row')
    parser_benchmark.add_argument('--output', required=True, help='table of all trials')
    parser_benchmark.add_argument('--summary', help='box-plot table, default <output>-summary.csv')
    parser_benchmark.add_argument('--by-count', action='store_true', help='add summary per missing count')
    parser_benchmark.add_argument('--archive', help='store complete report (msgpack)')
    parser_benchmark.set_defaults(func=cmd_benchmark, parser=parser_benchmark)

    parser_distance = subparsers.add_parser('distance', help='distance of two rows')
    parser_distance.add_argument('--input', required=True, help='typed CSV file')
    parser_distance.add_argument('--rows', type=row_pair, required=True, help='0-based row indices i,j')
    parser_distance.set_defaults(func=cmd_distance, parser=parser_distance)

    parser_validate = subparsers.add_parser('validate', help='check typed CSV file')
    parser_validate.add_argument('--input', required=True, help='typed CSV file')
    parser_validate.set_defaults(func=cmd_validate, parser=parser_validate)

    parser_fixtures = subparsers.add_parser('fixtures', help='list or export embedded matrices')
    parser_fixtures.add_argument('--name', choices=sorted(all_fixtures))
    parser_fixtures.add_argument('--output-dir', help='write <name>.csv files into directory')
    parser_fixtures.set_defaults(func=cmd_fixtures, parser=parser_fixtures)
    return parser


def main(argv=None):
    args = create_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(message)s')
    return args.func(args, args.parser)


if __name__ == "__main__":
    sys.exit(main())

# vim: expandtab sw=4 ts=4
