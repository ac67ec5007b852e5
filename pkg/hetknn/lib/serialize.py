"""
  Binary archive of benchmark trials
"""
import msgpack

ARCHIVE_VERSION = 1


def pack_records(dataset_name, records):
    """
      Pack named tuples of one type as msgpack bytes. Field names are stored
      once, every record as a plain array. Floats keep all 64 bits.
    """
    records = list(records)
    fields = list(records[0]._fields) if len(records) > 0 else []
    data = {
        'version': ARCHIVE_VERSION,
        'dataset_name': dataset_name,
        'fields': fields,
        'records': [list(record) for record in records],
    }
    return msgpack.packb(data, use_bin_type=True)


def unpack_records(bytes_data, record_type):
    """Return (dataset_name, list of record_type) of packed archive"""
    data = msgpack.unpackb(bytes_data, raw=False)
    assert data.get('version') == ARCHIVE_VERSION, data.get('version')
    records = data['records']
    if len(records) > 0:
        assert tuple(data['fields']) == record_type._fields, (data['fields'], record_type._fields)
    return data['dataset_name'], [record_type(*record) for record in records]

# vim: expandtab sw=4 ts=4
