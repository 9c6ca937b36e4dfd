import pytest

from graphbench_core.config import (MODULE_LIMITS, WORKERS_ENV, CONFIG_ENV, Caps, load_config, set_caps,
                                    validate_caps)
from graphbench_core.errors import CapacityError, UsageError


def test_defaults(config):
    assert config.workers == 1
    assert config.format == 'json'
    assert config.seed is None
    assert config.output is None
    assert config.claims == []
    assert config.rational_states == 200
    assert set_caps(config.caps) == {}


def test_yaml_file(tmp_path):
    path = tmp_path / 'bench.yml'
    path.write_text("workers: 3\nseed: 7\nformat: csv\nrational-states: 50\ncaps:\n  max_n: 6\n  kmax: 3\n")
    config = load_config(str(path), environ={})
    assert config.workers == 3
    assert config.seed == 7
    assert config.format == 'csv'
    assert config.rational_states == 50
    assert set_caps(config.caps) == {'max_n': 6, 'kmax': 3}


def test_file_from_environment(tmp_path):
    path = tmp_path / 'bench.yml'
    path.write_text("seed: 11\n")
    assert load_config(environ={CONFIG_ENV: str(path)}).seed == 11


def test_precedence(tmp_path):
    path = tmp_path / 'bench.yml'
    path.write_text("workers: 3\ncaps:\n  max_n: 6\n  kmax: 3\n")
    config = load_config(str(path), environ={WORKERS_ENV: '5'})
    assert config.workers == 5

    config = load_config(str(path), {'workers': 2, 'seed': None, 'caps': {'max_n': 4, 'kmax': None}},
                         environ={WORKERS_ENV: '5'})
    assert config.workers == 2
    assert config.seed is None
    assert set_caps(config.caps) == {'max_n': 4, 'kmax': 3}


def test_bad_values(tmp_path):
    with pytest.raises(UsageError):
        load_config(environ={WORKERS_ENV: 'many'})
    with pytest.raises(UsageError):
        load_config(overrides={'workers': 0}, environ={})
    with pytest.raises(UsageError):
        load_config(overrides={'format': 'xml'}, environ={})
    with pytest.raises(UsageError):
        load_config(str(tmp_path / 'missing.yml'), environ={})

    listing = tmp_path / 'list.yml'
    listing.write_text("- 1\n- 2\n")
    with pytest.raises(UsageError):
        load_config(str(listing), environ={})

    broken = tmp_path / 'broken.yml'
    broken.write_text("workers: [1\n")
    with pytest.raises(UsageError):
        load_config(str(broken), environ={})


def test_validate_caps():
    validate_caps(Caps({'max_n': 7, 'kmax': 4}), 'competition')
    validate_caps(Caps({'max_n': 99}), 'unknown-module')
    with pytest.raises(CapacityError) as error:
        validate_caps(Caps({'max_p': 9}), 'cover')
    assert error.value.module == 'cover'
    assert error.value.limit == MODULE_LIMITS['cover']['max_p']
    with pytest.raises(CapacityError):
        validate_caps(Caps({'max_states': 2001}), 'chain')
