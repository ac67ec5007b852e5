import unittest
from typing import NamedTuple

import msgpack

from hetknn.lib.serialize import pack_records, unpack_records, ARCHIVE_VERSION


class Sample(NamedTuple):
    k: int
    error: float
    imputable: bool


class Other(NamedTuple):
    k: int
    value: float
    imputable: bool


class SerializeTest(unittest.TestCase):

    def test_pack_unpack(self):
        records = [Sample(1, 0.1 + 0.2, True), Sample(2, None, False), Sample(3, 5e-324, True)]
        name, loaded = unpack_records(pack_records('case1', records), Sample)
        self.assertEqual(name, 'case1')
        self.assertEqual(loaded, records)
        self.assertIsInstance(loaded[0], Sample)
        self.assertEqual(loaded[0].error.hex(), (0.1 + 0.2).hex())

    def test_layout(self):
        data = msgpack.unpackb(pack_records('demo', [Sample(1, 0.5, True)]), raw=False)
        self.assertEqual(data, {'version': ARCHIVE_VERSION, 'dataset_name': 'demo',
                                'fields': ['k', 'error', 'imputable'], 'records': [[1, 0.5, True]]})

    def test_empty(self):
        self.assertEqual(unpack_records(pack_records('none', []), Sample), ('none', []))

    def test_mismatch(self):
        packed = pack_records('demo', [Sample(1, 0.5, True)])
        with self.assertRaises(AssertionError):
            unpack_records(packed, Other)

        future = msgpack.packb({'version': ARCHIVE_VERSION + 1, 'dataset_name': 'demo',
                                'fields': [], 'records': []}, use_bin_type=True)
        with self.assertRaises(AssertionError):
            unpack_records(future, Sample)

# vim: expandtab sw=4 ts=4
