"""Dihedral covers, linking forms and ribbon obstructions for knots."""

import json
from pathlib import Path

from ._dihedralsig import (
    Error,
    InconsistencyError,
    IndeterminateError,
    InputError,
    KnotDiagram,
    assemble_xi,
    bridge_bound,
    cokernel,
    default_table_path,
    disk_cover_euler,
    genus_bound,
    ih_euler_characteristic,
    knot_names,
    ribbon_bound,
    sashka_signature,
    seifert_matrix,
    smith_invariants,
    tristram_levine,
    viro_signature,
)
from . import _dihedralsig as _core

__all__ = [
    "Error",
    "InconsistencyError",
    "IndeterminateError",
    "InputError",
    "KnotDiagram",
    "assemble_xi",
    "bridge_bound",
    "cokernel",
    "color_census",
    "default_table_path",
    "det_report",
    "disk_cover_euler",
    "full_report",
    "genus_bound",
    "ih_euler_characteristic",
    "knot_names",
    "obstruct_report",
    "ribbon_bound",
    "sashka_signature",
    "seifert_matrix",
    "smith_invariants",
    "tristram_levine",
    "viro_signature",
]


_PACKAGED_TABLE = Path(__file__).with_name("knots.json")


def _table(table):
    if table:
        return str(table)
    return str(_PACKAGED_TABLE) if _PACKAGED_TABLE.exists() else ""


def color_census(name="", p=3, *, pd="", braid="", table=""):
    return json.loads(_core._color_census(name, pd, braid, _table(table), p))


def det_report(name="", *, pd="", braid="", table=""):
    return json.loads(_core._det_report(name, pd, braid, _table(table)))


def obstruct_report(name="", p=3, *, pd="", braid="", table="", sigma_w=None, cache_dir=""):
    sw = json.dumps(sigma_w) if sigma_w is not None else ""
    return json.loads(_core._obstruct_report(name, pd, braid, _table(table), p, sw, str(cache_dir)))


def full_report(primes=(3, 5, 7), *, table="", cache_dir=""):
    return json.loads(_core._full_report(_table(table), list(primes), str(cache_dir)))
