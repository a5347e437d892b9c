"""Two qubit-oscillator subsystems coupled through their oscillators.

Frequencies and rates are in units of the qubit frequency omega0.
"""

import json as _json

from ._core import (
    ConfigError,
    CutoffTooSmall,
    DerivedParams,
    Error,
    InvalidState,
    StabilityError,
    __version__,
    concurrence,
    density_matrix,
    derive,
    eof,
    params_table,
    preset_names,
    purity,
    purity_closed_form,
)
from . import _core


def _doc(config):
    return config if isinstance(config, str) else _json.dumps(config)


def run_timeseries(config, overrides=()):
    """Runs each panel of `config` (dict or JSON text); returns a list of
    (columns, metadata) with columns as a dict of lists."""
    return [(cols, _json.loads(meta)) for cols, meta in _core.run_timeseries(_doc(config), list(overrides))]


def to_csv(config, overrides=()):
    return _core.to_csv(_doc(config), list(overrides))


def compare(config, overrides=()):
    return _json.loads(_core.compare(_doc(config), list(overrides)))


__all__ = [
    "ConfigError",
    "CutoffTooSmall",
    "DerivedParams",
    "Error",
    "InvalidState",
    "StabilityError",
    "compare",
    "concurrence",
    "density_matrix",
    "derive",
    "eof",
    "params_table",
    "preset_names",
    "purity",
    "purity_closed_form",
    "run_timeseries",
    "to_csv",
]
