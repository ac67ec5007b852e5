import io
import os
import json
import logging
import unittest
from tempfile import TemporaryDirectory
from unittest.mock import patch

from hetknn.cli import main, create_parser, TRACE_HEADER
from hetknn.evaluation import load_report, SUMMARY_HEADER
from hetknn.fixtures import fixture
from hetknn.test_cells import table3
from hetknn.typedcsv import load, save

logging.getLogger().setLevel(logging.ERROR)


def run(argv):
    """Return (exit code, stdout, stderr) of the command line tool"""
    with patch('sys.stdout', new_callable=io.StringIO) as out, \
            patch('sys.stderr', new_callable=io.StringIO) as err:
        try:
            code = main(argv)
        except SystemExit as e:
            code = e.code
    return code, out.getvalue(), err.getvalue()


class CliTest(unittest.TestCase):

    def setUp(self):
        self.tmpdir = TemporaryDirectory()
        self.addCleanup(self.tmpdir.cleanup)

    def path(self, filename):
        return os.path.join(self.tmpdir.name, filename)

    def test_parser(self):
        args = create_parser().parse_args(['distance', '--input', 'a.csv', '--rows', '2,1'])
        self.assertEqual(args.rows, (2, 1))
        self.assertEqual(args.command, 'distance')

    def test_impute(self):
        save(table3(), self.path('table3.csv'))
        code, __, err = run(['impute', '--input', self.path('table3.csv'), '--output', self.path('out.csv'),
                             '--k', '2', '--trace', self.path('trace.csv')])
        self.assertEqual(code, 0, err)
        completed = load(self.path('out.csv'))
        self.assertTrue(completed.is_complete())
        for value, expected in zip(completed[2, 2], (0.3935, 0.5604, 0.7273)):
            self.assertAlmostEqual(value, expected, delta=1e-3)

        with open(self.path('trace.csv')) as f:
            lines = f.read().splitlines()
        self.assertEqual(lines[0], TRACE_HEADER)
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith('2,2,1,'))
        self.assertTrue(lines[2].startswith('2,2,0,'))

    def test_impute_unimputable(self):
        with open(self.path('single.csv'), 'w') as f:
            f.write('x:crisp\n0.5\nnan\n0.7\n')
        code, __, err = run(['impute', '--input', self.path('single.csv'), '--output', self.path('out.csv'),
                             '--k', '1'])
        self.assertEqual(code, 1)
        self.assertIn('unimputable cell: row 2, column 1', err)
        self.assertIsNone(load(self.path('out.csv'))[1, 0])

    def test_impute_bad_input(self):
        with open(self.path('bad.csv'), 'w') as f:
            f.write('x:crisp,y:interval\n0.5,[0.9;0.1]\n')
        code, __, err = run(['impute', '--input', self.path('bad.csv'), '--output', self.path('out.csv'),
                             '--k', '1'])
        self.assertEqual(code, 1)
        self.assertIn('row 1, column 2: lower > upper', err)
        self.assertFalse(os.path.exists(self.path('out.csv')))

        code, __, err = run(['impute', '--input', self.path('missing.csv'), '--output', self.path('out.csv'),
                             '--k', '1'])
        self.assertEqual(code, 1)
        self.assertIn('cannot read', err)

    def test_usage_errors(self):
        code, __, __ = run(['impute', '--input', 'a.csv', '--output', 'b.csv', '--k', '0'])
        self.assertEqual(code, 2)
        code, __, __ = run(['benchmark', '--output', self.path('b.csv')])
        self.assertEqual(code, 2)
        code, __, __ = run(['benchmark', '--fixture', 'case1', '--synthetic', 'crisp', '--output', self.path('b.csv')])
        self.assertEqual(code, 2)
        code, __, err = run(['benchmark', '--fixture', 'case9', '--output', self.path('b.csv')])
        self.assertEqual(code, 2)
        self.assertIn('unknown fixture', err)
        code, __, err = run(['benchmark', '--fixture', 'case1', '--nan-max', '4', '--output', self.path('b.csv')])
        self.assertEqual(code, 2)
        self.assertIn('exceeds number of rows', err)
        code, __, __ = run(['benchmark', '--fixture', 'case1', '--k-min', '3', '--k-max', '2',
                            '--output', self.path('b.csv')])
        self.assertEqual(code, 2)

    def test_benchmark(self):
        argv = ['benchmark', '--fixture', 'case3', '--k-min', '1', '--k-max', '3', '--nan-min', '1',
                '--nan-max', '2', '--trials', '4', '--seed', '7', '--output', self.path('case3.csv'),
                '--archive', self.path('case3.msgpack')]
        code, out, err = run(argv)
        self.assertEqual(code, 0, err)
        with open(self.path('case3.csv')) as f:
            samples = f.read()
        with open(self.path('case3-summary.csv')) as f:
            summary = f.read()
        self.assertEqual(len(samples.splitlines()), 1 + 3 * 2 * 4)
        self.assertEqual(summary.splitlines()[0], SUMMARY_HEADER)
        self.assertEqual(len(summary.splitlines()), 4)
        self.assertEqual(out, summary)
        self.assertEqual(load_report(self.path('case3.msgpack')).dataset_name, 'case3')

        # same arguments give byte identical output
        code, out2, __ = run(argv)
        self.assertEqual(out2, out)
        with open(self.path('case3.csv')) as f:
            self.assertEqual(f.read(), samples)

    def test_benchmark_config(self):
        config = {'version': 1, 'benchmark': {'fixture': 'case2', 'k_min': 2, 'k_max': 3, 'nan_max': 2,
                                              'trials': 3, 'mask_mode': 'column'}}
        with open(self.path('preset.json'), 'w') as f:
            json.dump(config, f)
        code, out, err = run(['benchmark', '--config', self.path('preset.json'), '--trials', '2',
                              '--output', self.path('out.csv'), '--summary', self.path('summary.csv'),
                              '--by-count'])
        self.assertEqual(code, 0, err)
        with open(self.path('out.csv')) as f:
            self.assertEqual(len(f.read().splitlines()), 1 + 2 * 2 * 2)
        self.assertIn('k,missing_count,', out)

        # command line source replaces configured fixture
        code, __, err = run(['benchmark', '--config', self.path('preset.json'), '--input', self.path('none.csv'),
                             '--output', self.path('out.csv')])
        self.assertEqual(code, 1)
        self.assertIn('cannot read', err)

    def test_benchmark_incomplete_input(self):
        save(table3(), self.path('table3.csv'))
        code, __, err = run(['benchmark', '--input', self.path('table3.csv'), '--output', self.path('b.csv')])
        self.assertEqual(code, 1)
        self.assertIn('complete', err)

    def test_benchmark_synthetic(self):
        code, out, err = run(['benchmark', '--synthetic', 'interval', '--rows', '12', '--columns', '2',
                              '--k-max', '2', '--trials', '2', '--output', self.path('syn.csv')])
        self.assertEqual(code, 0, err)
        self.assertEqual(len(out.splitlines()), 3)

    def test_distance(self):
        save(table3(), self.path('table3.csv'))
        code, out, err = run(['distance', '--input', self.path('table3.csv'), '--rows', '2,0'])
        self.assertEqual(code, 0, err)
        lines = out.splitlines()
        self.assertTrue(lines[0].startswith('column c1 (crisp): '))
        self.assertAlmostEqual(float(lines[0].split(': ')[1]), 0.0089)
        self.assertEqual(lines[2], 'column c3 (fuzzy): missing')
        self.assertTrue(lines[3].startswith('distance 0.266'))
        self.assertEqual(lines[4], 'shared_features 2')

        code, __, __ = run(['distance', '--input', self.path('table3.csv'), '--rows', '1,1'])
        self.assertEqual(code, 2)
        code, __, __ = run(['distance', '--input', self.path('table3.csv'), '--rows', '0,3'])
        self.assertEqual(code, 2)

    def test_distance_incomparable(self):
        with open(self.path('sparse.csv'), 'w') as f:
            f.write('a:crisp,b:crisp\n0.5,\n,0.2\n')
        code, out, __ = run(['distance', '--input', self.path('sparse.csv'), '--rows', '0,1'])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[-1], 'incomparable')

    def test_validate(self):
        save(fixture('case2'), self.path('case2.csv'))
        code, out, __ = run(['validate', '--input', self.path('case2.csv')])
        self.assertEqual(code, 0)
        self.assertEqual(out, 'valid 4x4 matrix\n')

        with open(self.path('bad.csv'), 'w') as f:
            f.write('x:crisp,y:fuzzy\n0.5,(0.3;0.2;0.1)\n0.6,(0.1;0.2;0.3)\n')
        code, out, __ = run(['validate', '--input', self.path('bad.csv')])
        self.assertEqual(code, 1)
        self.assertEqual(out, 'row 1, column 2: a1 <= a2 <= a3 violated\n')

    def test_unknown_option(self):
        save(fixture('case1'), self.path('case1.csv'))
        code, out, err = run(['validate', '--input', self.path('case1.csv'), '--bogus'])
        self.assertEqual(code, 2)
        self.assertEqual(out, '')
        self.assertIn('usage:', err)
        self.assertIn('--bogus', err)

    def test_validate_ragged(self):
        with open(self.path('ragged.csv'), 'w') as f:
            f.write('a:crisp,b:crisp\n1,2\n3\n')
        code, out, err = run(['validate', '--input', self.path('ragged.csv')])
        self.assertEqual(code, 1)
        self.assertEqual(out, '')
        self.assertIn('row 2: expected 2 fields, got 1', err)

    def test_fixtures(self):
        code, out, __ = run(['fixtures'])
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[1], 'case2 4x4 crisp,fuzzy,fuzzy,interval')

        code, __, __ = run(['fixtures', '--output-dir', self.path('data')])
        self.assertEqual(code, 0)
        self.assertEqual(sorted(os.listdir(self.path('data'))), ['case1.csv', 'case2.csv', 'case3.csv'])
        self.assertEqual(load(self.path('data/case1.csv')), fixture('case1'))

# vim: expandtab sw=4 ts=4
