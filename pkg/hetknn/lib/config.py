"""
  Benchmark configuration files
"""
import json


CONFIG_VER = 1
SUPPORTED_VERSIONS = [CONFIG_VER]

DEFAULT_BENCHMARK = {
    'k_min': 1,
    'k_max': 5,
    'nan_min': 1,
    'nan_max': 1,
    'trials': 100,
    'seed': 0,
    'mask_mode': 'rows',
    'jobs': 1,
    'rows': 80,
    'columns': 4,
    'duplication': 1,
}


class MergeConflictError(Exception):
    pass


def load(*filenames):
    ret = {}
    for filename in filenames:
        with open(filename) as f:
            data = json.load(f)
            assert 'version' in data, data
            assert data['version'] in SUPPORTED_VERSIONS, data['version']
            ret = merge_dict(ret, data)
    return ret


def merge_dict(dict1, dict2):
    if not isinstance(dict1, dict) or not isinstance(dict2, dict):
        raise MergeConflictError(str((dict1, dict2)))
    ret = dict1.copy()
    for key in dict2.keys():
        if key in dict1:
            if dict1[key] != dict2[key]:
                ret[key] = merge_dict(dict1[key], dict2[key])
        else:
            ret[key] = dict2[key]
    return ret


def benchmark_options(config, overrides):
    """
      Combine defaults, the `benchmark` section of loaded configuration and
      explicitly given options (None means not given).
    """
    ret = dict(DEFAULT_BENCHMARK)
    ret.update(config.get('benchmark', {}))
    ret.update({key: value for key, value in overrides.items() if value is not None})
    return ret

# vim: expandtab sw=4 ts=4
