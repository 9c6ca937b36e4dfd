"""
Run configuration for the workbench.

Values come from the model defaults, then an optional YAML key/value file whose keys mirror
the long command line flags, then the environment, then the command line itself.

    workers: 4
    seed: 7
    format: json
    caps:
      max_n: 10
      kmax: 4
"""
import os
from typing import Optional

import yaml

from assemblyline import odm

from graphbench_core.errors import CapacityError, UsageError

CONFIG_ENV = 'GRAPHBENCH_CONFIG'
WORKERS_ENV = 'GRAPHBENCH_WORKERS'

# Hard limits of the exhaustive searches, per module
MODULE_LIMITS = {
    'graph': {'max_n': 8},
    'invariants': {'max_n': 10},
    'spectral': {'max_n': 12},
    'trees': {'max_n': 16},
    'bipartite': {'max_n': 14},
    'cover': {'max_p': 8, 'max_q': 8},
    'competition': {'max_n': 7, 'kmax': 4},
    'chain': {'max_n': 6, 'max_states': 2000},
}


@odm.model()
class Caps(odm.Model):
    """Size caps; an unset cap leaves each claim on its own default."""
    max_n = odm.Optional(odm.Integer())
    max_delta = odm.Optional(odm.Integer())
    max_p = odm.Optional(odm.Integer())
    max_q = odm.Optional(odm.Integer())
    kmax = odm.Optional(odm.Integer())
    max_states = odm.Optional(odm.Integer())
    samples = odm.Optional(odm.Integer())
    steps = odm.Optional(odm.Integer())


@odm.model()
class RunConfig(odm.Model):
    subcommand = odm.Optional(odm.Keyword())
    claims = odm.List(odm.Keyword(), default=[])
    caps: Caps = odm.Compound(Caps, default={})
    seed = odm.Optional(odm.Integer())
    output = odm.Optional(odm.Keyword())
    format = odm.Enum(values=['json', 'csv'], default='json')
    workers = odm.Integer(default=1)
    rational_states = odm.Integer(default=200)   # exact arithmetic for chains up to this many states


def set_caps(caps: Caps) -> dict:
    """The caps that were actually given, as a plain dictionary."""
    return {name: value for name, value in caps.as_primitives().items() if value is not None}


def validate_caps(caps: Caps, module: str):
    for name, limit in MODULE_LIMITS.get(module, {}).items():
        value = getattr(caps, name, None)
        if value is not None and value > limit:
            raise CapacityError(f"{name}={value} exceeds the {module} limit of {limit}", module=module, limit=limit)


def _read_file(path: str) -> dict:
    try:
        with open(path) as config_file:
            data = yaml.safe_load(config_file) or {}
    except OSError as error:
        raise UsageError(f"Could not read config file {path}: {error}")
    except yaml.YAMLError as error:
        raise UsageError(f"Malformed config file {path}: {error}")
    if not isinstance(data, dict):
        raise UsageError(f"Config file {path} must hold key/value pairs")
    return {key.replace('-', '_'): value for key, value in data.items()}


def load_config(path: Optional[str] = None, overrides: Optional[dict] = None, environ=None) -> RunConfig:
    environ = os.environ if environ is None else environ
    data = {}

    path = path or environ.get(CONFIG_ENV)
    if path:
        data.update(_read_file(path))

    if environ.get(WORKERS_ENV):
        try:
            data['workers'] = int(environ[WORKERS_ENV])
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {environ[WORKERS_ENV]!r}")

    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key == 'caps':
            caps = dict(data.get('caps') or {})
            caps.update({name: cap for name, cap in value.items() if cap is not None})
            data['caps'] = caps
        else:
            data[key] = value

    try:
        config = RunConfig(data)
    except (ValueError, TypeError, KeyError) as error:
        raise UsageError(f"Invalid configuration: {error}")

    if config.workers < 1:
        raise UsageError("workers must be at least 1")
    return config
