"""Python bindings for the compton-ledger verification engine.

The heavy lifting lives in the C++ extension `_core`; this wrapper turns
its JSON-string returns into dictionaries.
"""

import json as _json

from ._core import (
    ConstantsTable,
    LedgerError,
    charge_fraction,
    closed_form_n,
    creation_rate,
    decade_gap,
    derived_observables,
    onshell_determinant,
    onshell_nullspace,
    quark_mass_estimate,
    relation_ids,
    snyder_deformation,
    verify_clifford,
    zpf_energy,
)
from . import _core

__all__ = [
    "ConstantsTable",
    "LedgerError",
    "charge_fraction",
    "check",
    "closed_form_n",
    "creation_rate",
    "decade_gap",
    "derived_observables",
    "onshell_determinant",
    "onshell_nullspace",
    "quark_mass_estimate",
    "relation_ids",
    "simulate",
    "snyder_deformation",
    "verify_clifford",
    "weak_coupling_check",
    "zpf_energy",
]


def check(table=None, rel=None, tol=None):
    """Run the built-in relation registry; returns the report as a dict."""
    if table is None:
        table = ConstantsTable.builtin()
    return _json.loads(_core.run_checks(table, rel, tol))


def simulate(table=None, n0=1.0, t_end=0.0, dt=0.0, mode="deterministic",
             seed=0, ensemble=1, stride=1):
    """Integrate dN/dt = sqrt(N)/tau; returns the time series as a dict."""
    if table is None:
        table = ConstantsTable.builtin()
    return _json.loads(
        _core.simulate(table, n0, t_end, dt, mode, seed, ensemble, stride))


def weak_coupling_check(table=None):
    if table is None:
        table = ConstantsTable.builtin()
    return _json.loads(_core.weak_coupling_check(table))
